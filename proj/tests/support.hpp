#pragma once

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/ext_nat.hpp"
#include "nakayama/module.hpp"
#include "oracles.hpp"

namespace doctest {
template <>
struct StringMaker<nakayama::ExtNat> {
    static String convert(const nakayama::ExtNat& x) { return x.to_string().c_str(); }
};
template <>
struct StringMaker<nakayama::Module> {
    static String convert(const nakayama::Module& m) { return nakayama::to_string(m).c_str(); }
};
template <>
struct StringMaker<nakayama::Algebra> {
    static String convert(const nakayama::Algebra& a)
    {
        return (nakayama::to_string(a.kind) + " (" + nakayama::kupisch_string(a) + ")").c_str();
    }
};
}  // namespace doctest

namespace testing {

inline nakayama::Algebra cyc(std::vector<int> c) { return nakayama::Algebra::cyclic(std::move(c)); }
inline nakayama::Algebra lin(std::vector<int> c) { return nakayama::Algebra::linear(std::move(c)); }
inline const nakayama::ExtNat inf = nakayama::ExtNat::infinity();

/// Every cyclic (N 2..4, entries <= 9) and linear (N 1..5) algebra, rotations collapsed.
inline const std::vector<nakayama::Algebra>& small_algebras()
{
    static const std::vector<nakayama::Algebra> all = [] {
        auto cyclic = oracle::enumerate(2, 4, 9, true, false, true);
        auto more = oracle::enumerate(1, 5, 9, false, true, true);
        cyclic.insert(cyclic.end(), more.begin(), more.end());
        return cyclic;
    }();
    return all;
}

inline std::vector<nakayama::Algebra> small_cyclic()
{
    std::vector<nakayama::Algebra> out;
    for (const auto& a : small_algebras())
        if (a.is_cyclic())
            out.push_back(a);
    return out;
}

inline std::string label(const nakayama::Algebra& a)
{
    return nakayama::to_string(a.kind) + " (" + nakayama::kupisch_string(a) + ")";
}

}  // namespace testing
