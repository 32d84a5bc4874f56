#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Exact rational scalar. Always kept in canonical reduced form
/// (gcd(|num|, den) = 1, den >= 1). gmp maintains canonical form through
/// arithmetic but not through the two-argument constructor, hence the
/// explicit canonicalize there.
class Rat : public mpq_class {
public:
    Rat() = default;
    Rat(const Rat&) = default;
    Rat(Rat&&) = default;
    Rat& operator=(const Rat&) = default;
    Rat& operator=(Rat&&) = default;

    Rat(const mpq_class& q) : mpq_class(q) {}
    Rat(mpq_class&& q) : mpq_class(std::move(q)) {}
    template <class T, class U>
    Rat(const __gmp_expr<T, U>& e) : mpq_class(e) {}
    Rat(int n) : mpq_class(n) {}
    Rat(long n) : mpq_class(n) {}
    Rat(long n, long d) : mpq_class(n, d) { canonicalize(); }

    using mpq_class::operator=;
};

/// Parses "p/q" or "p" (arbitrary precision, optional sign).
/// Throws std::invalid_argument on malformed input or zero denominator.
inline Rat rat_parse(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + s);
    r.canonicalize();
    return r;
}

/// Canonical serialization: "p/q", or just "p" when q = 1.
inline std::string rat_str(const Rat& r)
{
    return r.get_str();
}

} // namespace leibniz
