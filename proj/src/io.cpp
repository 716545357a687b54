/*
   Copyright 2026 The octsolve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "octsolve/io.hpp"

#include <charconv>
#include <cctype>

namespace octsolve {

AnyField parse_field(std::string_view text) {
    if (text == "q") return RationalField{};
    if (text == "r") return RealField{};
    if (text.starts_with("gf:")) {
        const auto digits = text.substr(3);
        std::uint64_t p = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
            throw std::invalid_argument("bad field modulus in '" + std::string(text) + "'");
        }
        if (p >= (1ULL << 31)) throw std::invalid_argument("modulus too large: " + std::string(digits));
        return PrimeField(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q, r or gf:<p>)");
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ';' || ch == '[' || ch == ']' || std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            cur.push_back(ch);
        }
    }
    flush();
    return out;
}

}  // namespace octsolve
