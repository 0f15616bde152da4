#pragma once

#include <string>

#include "json.hpp"
#include "filiform/cochain.hpp"
#include "filiform/lie_algebra.hpp"

namespace filiform::io {

using json = nlohmann::json;

json to_json(const Q& q);  // "num/den"
Q rational_from_json(const json& j);

// {"dim": n, "brackets": [[i, j, [[k, "num/den"], ...]], ...], "weights": [...]}, 1-based
json to_json(const LieAlgebra<Q>& g);
LieAlgebra<Q> algebra_from_json(const json& j);

// [[[i1, ..., ip], "num/den"], ...]
json to_json(const Form<Q>& f);
Form<Q> form_from_json(const json& j, int degree);

// 3 e1^e4 - 1/2 e2^e3
std::string form_text(const Form<Q>& f);

json parse(const std::string& text);
std::string render(const json& j);  // canonical, byte-stable
LieAlgebra<Q> read_algebra(const std::string& path);
void write_text(const std::string& path, const std::string& text);

std::string digest(const std::string& bytes);  // FNV-1a 64, hex

}  // namespace filiform::io
