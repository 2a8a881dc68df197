#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gbcodes/betti.hpp"
#include "gbcodes/codes.hpp"
#include "gbcodes/counterexample.hpp"
#include "gbcodes/groebner.hpp"
#include "gbcodes/orders.hpp"

namespace gbcodes::cli {

using json = nlohmann::json;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
/// InvalidInput on malformed JSON.
json parse_json(const std::string& text, const std::string& what);

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 14695981039346656037ull);
std::string hex64(std::uint64_t v);

/// {"p": int, "s": int, "modulus": [ints]?}
Field parse_field(const json& j);
json field_json(const Field& f);

/// Entries are integer codes or "a^j" strings.
Word parse_word(const Field& f, const json& j);
json word_json(const Field& f, const Word& w);
json words_json(const Field& f, const std::vector<Word>& ws);

/// {"field": {...}, "generator": [[...], ...]}
LinearCode parse_code(const json& j);
json code_json(const LinearCode& code);

/// {"n": int, "generators": [[1-based vertices], ...]}
SquarefreeIdeal parse_ideal(const json& j);

/// [[i, j, e], ...] from the largest variable down.
json monomial_json(const Monomial& m, int q);

json order_check_json(const Field& f, const OrderCheck& c);

/// {"dense_prefix": m, "field", "n", "k", "rows": [c1, c2], "blocks": [{"u", "v_offset"}]}
json sparse_code_json(const CounterexampleCode& cc);

}  // namespace gbcodes::cli
