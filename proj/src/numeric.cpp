#include "gvk/numeric.hpp"

#include <stdexcept>

#include "gvk/errors.hpp"

namespace gvk {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

namespace {

bool is_strict_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    if (i >= s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    if (s[i] == '0' && s.size() - i > 1) return false;  // no leading zeros
    if (s == "-0") return false;
    return true;
}

}  // namespace

Int int_from_string(const std::string& s) {
    if (!is_strict_integer_literal(s))
        throw ParseError("not an integer literal: \"" + s + "\"");
    return Int(s, 10);
}

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_strict_integer_literal(num) || !is_strict_integer_literal(den))
        throw ParseError("not a rational literal: \"" + s + "\"");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("not a rational literal: \"" + s + "\"");
    if (q.get_den() == 0) throw ParseError("zero denominator: \"" + s + "\"");
    Rat canonical = q;
    canonical.canonicalize();
    if (canonical.get_str() != s)
        throw ParseError("rational not in reduced form: \"" + s + "\"");
    return canonical;
}

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rat rat_pow(const Int& base, long exp) {
    if (exp >= 0) return Rat(int_pow(base, static_cast<unsigned long>(exp)));
    if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    Rat out(1, int_pow(base, static_cast<unsigned long>(-exp)));
    out.canonicalize();
    return out;
}

Int binomial(const Int& top, unsigned long k) {
    Int num = 1;
    Int den = 1;
    for (unsigned long i = 0; i < k; ++i) {
        num *= top - static_cast<long>(i);
        den *= static_cast<long>(i + 1);
    }
    Int out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

Int floor_div(const Rat& a, const Rat& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Rat q = a / b;
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

}  // namespace gvk
