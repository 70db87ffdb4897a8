#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace Eigen {

// mpq_class as an Eigen scalar (the custom-scalar recipe from the Eigen manual).
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

}  // namespace Eigen

namespace homlie {

using Rat = mpq_class;
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization). Throws
/// std::invalid_argument on malformed input or a zero denominator.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false, slash = false, denom_digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            (slash ? denom_digits : digits) = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
        } else {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
    }
    if (!digits || (slash && !denom_digits))
        throw std::invalid_argument("malformed rational literal: " + s);
    Rat r(s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string format_rational(const Rat& r) { return r.get_str(); }

}  // namespace homlie
