// Copyright 2026 The gptkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gptk/rational.hpp"

#include <cctype>

#include "gptk/errors.hpp"

namespace gptk {

namespace {

bool all_digits(const std::string &s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat rat_parse(const std::string &text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw ParseError("empty rational literal");
    }

    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        pos = 1;
    }
    std::string body = s.substr(pos);
    if (body.empty()) {
        throw ParseError("malformed rational literal '" + text + "'");
    }

    Rat value;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed fraction '" + text + "'");
        }
        mpz_class n(num), d(den);
        if (d == 0) {
            throw ParseError("zero denominator in '" + text + "'");
        }
        value = Rat(n, d);
        value.canonicalize();
    } else if (auto dot = body.find('.'); dot != std::string::npos) {
        std::string whole = body.substr(0, dot);
        std::string frac = body.substr(dot + 1);
        if (whole.empty()) {
            whole = "0";
        }
        if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) {
            throw ParseError("malformed decimal '" + text + "'");
        }
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) {
            scale *= 10;
        }
        mpz_class n = mpz_class(whole) * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac));
        value = Rat(n, scale);
        value.canonicalize();
    } else {
        if (!all_digits(body)) {
            throw ParseError("malformed integer '" + text + "'");
        }
        value = Rat(mpz_class(body));
    }

    return negative ? Rat(-value) : value;
}

std::string rat_str(const Rat &q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace gptk
