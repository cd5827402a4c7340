// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/rational.hpp"

#include "bwc/errors.hpp"

namespace bwc {

std::string rat_str(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(std::string_view text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos)
        throw InvalidInput("empty rational literal");
    std::string s(text.substr(begin, end - begin + 1));

    if (s.find('.') != std::string::npos)
        throw InvalidInput("decimal literal '" + s +
                           "' is not exact; write a fraction such as 1/2");

    auto is_int_token = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string t) {
        if (t[0] == '+') t.erase(0, 1);   // mpz rejects an explicit plus
        return Int(t);
    };

    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int_token(s))
            throw InvalidInput("malformed rational literal '" + s + "'");
        return Rat(to_int(s));
    }
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!is_int_token(num) || !is_int_token(den))
        throw InvalidInput("malformed rational literal '" + s + "'");
    Int d = to_int(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
    return ratio(to_int(num), d);
}

std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    Int num = r.get_num();
    Int den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return ratio(sn, sd);
}

} // namespace bwc
