/**
 * Exact rational scalars used throughout the library.
 *
 * Rationals are GMP-backed and kept canonical (reduced, positive
 * denominator) by constructing them through division only.  The string
 * format is "p/q", or just "p" when the denominator is one.
 */

#ifndef SPLITKIT_RATIONAL_HPP
#define SPLITKIT_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace splitkit {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/** Parse "p/q" or "p"; the result is canonical. Throws on q = 0 or junk. */
inline Rat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(p) / Rat(q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& r) { return r.str(); }

/**
 * A rational extended by a single +infinity value.  Infinity takes part in
 * comparisons and min/max only, never in arithmetic; it shows up as the
 * coherency index of a weight with respect to an affine reference weight.
 */
class ExtRat {
  public:
    ExtRat() : infinite_(false), value_(0) {}
    explicit ExtRat(Rat v) : infinite_(false), value_(std::move(v)) {}

    static ExtRat infinity()
    {
        ExtRat r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }

    /** The finite value; throws if infinite. */
    const Rat& value() const
    {
        if (infinite_)
            throw std::logic_error("ExtRat: value() on infinity");
        return value_;
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b)
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b)
    {
        if (a.infinite_)
            return false;
        if (b.infinite_)
            return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    std::string str() const { return infinite_ ? "inf" : value_.str(); }

  private:
    bool infinite_;
    Rat value_;
};

}  // namespace splitkit

#endif
