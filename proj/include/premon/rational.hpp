#ifndef PREMON_RATIONAL_HPP
#define PREMON_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace premon {

// Exact rational scalar used throughout the workbench.
using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Parses "p", "-p", or "p/q" into a canonical rational.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    try {
        r = Rat(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: " + text);
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact integer power, negative exponents allowed for nonzero base.
inline Rat rat_pow(const Rat& base, long exp) {
    if (base == 0 && exp <= 0) throw std::domain_error("0 raised to non-positive power");
    mpz_class num = base.get_num(), den = base.get_den();
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), e);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), e);
    Rat r = (exp < 0) ? Rat(pd, pn) : Rat(pn, pd);
    r.canonicalize();
    return r;
}

} // namespace premon

#endif
