#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gbcodes/error.hpp"

namespace gbcodes::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::InvalidInput, "cannot write " + path);
  out << text;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::InvalidInput, what + ": " + e.what());
  }
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
  for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

namespace {

int get_int(const json& j, const char* key, const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_number_integer()) fail(Errc::InvalidInput, ctx + ": missing integer '" + key + "'");
  return j[key].get<int>();
}

const json& get_array(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array())
    fail(Errc::InvalidInput, ctx + ": missing array '" + key + "'");
  return j[key];
}

}  // namespace

Field parse_field(const json& j) {
  if (!j.is_object()) fail(Errc::InvalidInput, "field must be an object");
  const int p = get_int(j, "p", "field");
  const int s = j.contains("s") ? get_int(j, "s", "field") : 1;
  std::vector<int> modulus;
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array()) fail(Errc::InvalidInput, "field: modulus must be an array");
    for (const auto& c : j["modulus"]) {
      if (!c.is_number_integer()) fail(Errc::InvalidInput, "field: modulus entries must be integers");
      modulus.push_back(c.get<int>());
    }
  }
  return Field::make(p, s, modulus);
}

json field_json(const Field& f) {
  json j{{"p", f.p()}, {"s", f.s()}, {"q", f.q()}, {"alpha", f.alpha()}};
  if (f.s() > 1) j["modulus"] = f.modulus();
  return j;
}

Word parse_word(const Field& f, const json& j) {
  if (!j.is_array()) fail(Errc::InvalidInput, "word must be an array");
  Word w;
  w.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_number_integer())
      w.push_back(f.element(e.get<int>()));
    else if (e.is_string())
      w.push_back(f.parse(e.get<std::string>()));
    else
      fail(Errc::InvalidInput, "word entries must be integers or strings");
  }
  return w;
}

json word_json(const Field& f, const Word& w) {
  json j = json::array();
  for (Elem e : w) {
    if (f.s() == 1)
      j.push_back(static_cast<int>(e));
    else
      j.push_back(f.format(e));
  }
  return j;
}

json words_json(const Field& f, const std::vector<Word>& ws) {
  json j = json::array();
  for (const auto& w : ws) j.push_back(word_json(f, w));
  return j;
}

LinearCode parse_code(const json& j) {
  if (!j.is_object() || !j.contains("field")) fail(Errc::InvalidInput, "code file needs 'field'");
  Field f = parse_field(j["field"]);
  std::vector<Word> rows;
  for (const auto& r : get_array(j, "generator", "code file")) rows.push_back(parse_word(f, r));
  if (rows.empty()) fail(Errc::EmptyCode, "generator has no rows");
  return LinearCode::from_generator(f, std::move(rows));
}

json code_json(const LinearCode& code) {
  json f = field_json(code.field());
  f.erase("q");
  f.erase("alpha");
  return {{"field", f}, {"generator", words_json(code.field(), code.generator())}};
}

SquarefreeIdeal parse_ideal(const json& j) {
  if (!j.is_object()) fail(Errc::InvalidInput, "ideal file must be an object");
  const int n = get_int(j, "n", "ideal file");
  std::vector<std::vector<int>> gens;
  for (const auto& g : get_array(j, "generators", "ideal file")) {
    if (!g.is_array()) fail(Errc::InvalidInput, "ideal generators must be arrays");
    std::vector<int> v;
    for (const auto& x : g) {
      if (!x.is_number_integer()) fail(Errc::InvalidInput, "ideal vertices must be integers");
      v.push_back(x.get<int>());
    }
    gens.push_back(std::move(v));
  }
  return SquarefreeIdeal::make(n, gens);
}

json monomial_json(const Monomial& m, int q) {
  const VarLayout lay{static_cast<int>(m.nvars() / static_cast<std::size_t>(q - 1)), q};
  json j = json::array();
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    const auto [i, jj] = lay.coords(v);
    j.push_back({i, jj, static_cast<int>(m[v])});
  }
  return j;
}

json order_check_json(const Field& f, const OrderCheck& c) {
  json j{{"status", to_string(c.status)}, {"tested", c.tested}};
  if (c.witness) j["witness"] = {word_json(f, c.witness->first), word_json(f, c.witness->second)};
  return j;
}

json sparse_code_json(const CounterexampleCode& cc) {
  const Field& f = cc.seed.dprime.field();
  json fj = field_json(f);
  fj.erase("q");
  fj.erase("alpha");
  json blocks = json::array();
  for (int i = 1; i <= cc.t; ++i)
    blocks.push_back({{"u", word_json(f, cc.P[static_cast<std::size_t>(i - 1)])},
                      {"v_offset", cc.m + (i - 1) * cc.seed.r}});
  return {{"field", fj},
          {"n", cc.n},
          {"k", cc.k},
          {"dense_prefix", cc.m},
          {"block_width", cc.seed.r},
          {"v_value", static_cast<int>(f.neg(1))},
          {"rows", {word_json(f, cc.seed.c1p), word_json(f, cc.seed.c2p)}},
          {"blocks", blocks}};
}

}  // namespace gbcodes::cli
