#ifndef SPLITKIT_TEST_HELPERS_HPP
#define SPLITKIT_TEST_HELPERS_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "splitkit/polytope.hpp"

namespace sk_test {

using namespace splitkit;

inline MatrixXq mat(std::initializer_list<std::initializer_list<long>> rows)
{
    MatrixXq m(rows.size(), rows.begin()->size());
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

inline VectorXq vec(std::initializer_list<long> entries)
{
    VectorXq v(entries.size());
    Eigen::Index i = 0;
    for (long e : entries)
        v(i++) = e;
    return v;
}

/** The hexagon with vertex rows (1,p,q) used across the subdivision tests. */
inline VPolytope hexagon()
{
    return VPolytope::from_vertices(mat({{1, 0, 0},
                                         {1, 1, 0},
                                         {1, 2, 1},
                                         {1, 2, 2},
                                         {1, 1, 2},
                                         {1, 0, 1}}));
}

/** [-1,1]^3 cube, embedded to R^4. */
inline VPolytope cube3()
{
    MatrixXq corners(8, 3);
    int r = 0;
    for (int x : {-1, 1})
        for (int y : {-1, 1})
            for (int z : {-1, 1}) {
                corners(r, 0) = x;
                corners(r, 1) = y;
                corners(r, 2) = z;
                ++r;
            }
    return VPolytope::embed(corners);
}

/** xorshift generator for reproducible random rationals in tests. */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 1) {}

    std::uint64_t next()
    {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

    Rat rat(long num_range, long den_range)
    {
        long num = below(2 * num_range + 1) - num_range;
        long den = below(den_range) + 1;
        return Rat(num) / Rat(den);
    }

  private:
    std::uint64_t state_;
};

}  // namespace sk_test

#endif
