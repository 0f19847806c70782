/**@file
 *****************************************************************************
 The three worked F_3 / F_p examples, embedded bit-exactly, plus one
 clearly labelled single-entry variant of the second example.
 *****************************************************************************
 * @copyright  MIT license (see LICENSE file)
 *****************************************************************************/
#ifndef MMSPLAB_FIXTURES_HPP_
#define MMSPLAB_FIXTURES_HPP_

#include <string>
#include <vector>

#include "mmsplab/access.hpp"
#include "mmsplab/field.hpp"
#include "mmsplab/mmsp.hpp"

namespace mmsplab {

/** A named bundle with the access structure (on players) it is meant for. */
struct Fixture {
    std::string name;
    MmspBundle bundle;
    AccessStructure structure;
};

namespace fixtures {

/** Example 1 over F_3: G1 (6x2, self-column-orthogonal), F (6x2, column-
    orthogonal to G1), accept {{1,2},{2,3},{1,2,3}}, reject {{},{1},{2},{3}}. */
inline Fixture example1(BundleClass cls = BundleClass::EA)
{
    auto F3 = field_build(3, 1);
    Fixture fx;
    fx.name = "example1";
    fx.bundle.cls = cls;
    fx.bundle.G1 = MatGF::from_ints(F3, {{1, 0}, {1, 0}, {2, 2}, {0, 1}, {0, 1}, {0, 2}});
    fx.bundle.G2 = MatGF::empty(F3, 6, 0);
    fx.bundle.F = MatGF::from_ints(F3, {{2, 0}, {1, 0}, {1, 2}, {1, 0}, {0, 2}, {1, 2}});
    fx.bundle.n = 3;
    fx.bundle.r = 2;
    fx.bundle.t = 1;
    fx.structure = make_explicit(3, {subset_from_players({1, 2}), subset_from_players({2, 3}), subset_from_players({1, 2, 3})},
                                 {0, subset_from_players({1}), subset_from_players({2}), subset_from_players({3})});
    return fx;
}

/** Example 2 over F_3 exactly as printed: G1* (6x3), F* (6x2), accept
    {{1,2,3}}, reject {{},{1},{2},{3},{1,3}}. The printed columns of
    (G1*, F*) are linearly dependent, so acceptance of {1,2,3} fails. */
inline Fixture example2()
{
    auto F3 = field_build(3, 1);
    Fixture fx;
    fx.name = "example2";
    fx.bundle.cls = BundleClass::CQ;
    fx.bundle.G1 = MatGF::from_ints(F3, {{1, 0, 0}, {1, 0, 0}, {2, 2, 2}, {0, 1, 0}, {0, 1, 2}, {0, 2, 2}});
    fx.bundle.G2 = MatGF::empty(F3, 6, 0);
    fx.bundle.F = MatGF::from_ints(F3, {{2, 0}, {1, 1}, {1, 2}, {0, 0}, {0, 2}, {0, 2}});
    fx.bundle.n = 3;
    fx.bundle.r = 3;
    fx.bundle.t = 1;
    fx.structure = make_explicit(3, {subset_from_players({1, 2, 3})},
                                 {0, subset_from_players({1}), subset_from_players({2}), subset_from_players({3}),
                                  subset_from_players({1, 3})});
    return fx;
}

/** Example 2 with entry (5,2) of F* changed from 2 to 1; all displayed
    submatrices are untouched and every stated property then holds. */
inline Fixture example2_variant()
{
    Fixture fx = example2();
    fx.name = "example2-variant";
    fx.bundle.F.at(4, 1) = fx.bundle.F.ctx()->scalar(1);
    return fx;
}

/** Example 3 over F_p: g_{j,1} = 1, g_{j+p,2} = 1, f_{j,1} = f_{j+p,2} = j-1,
    with the threshold structure (2, 1, p). */
inline Fixture example3(uint32_t p = 3)
{
    auto Fp = field_build(p, 1);
    const size_t n = p;
    Fixture fx;
    fx.name = "example3-p" + std::to_string(p);
    fx.bundle.cls = BundleClass::EA;
    fx.bundle.G1 = MatGF::zeros(Fp, 2 * n, 2);
    fx.bundle.F = MatGF::zeros(Fp, 2 * n, 2);
    for (size_t j = 0; j < n; ++j) {
        fx.bundle.G1.at(j, 0) = Fp->one();
        fx.bundle.G1.at(j + n, 1) = Fp->one();
        fx.bundle.F.at(j, 0) = Fp->scalar(static_cast<int64_t>(j));
        fx.bundle.F.at(j + n, 1) = Fp->scalar(static_cast<int64_t>(j));
    }
    fx.bundle.G2 = MatGF::empty(Fp, 2 * n, 0);
    fx.bundle.n = static_cast<int>(n);
    fx.bundle.r = 2;
    fx.bundle.t = 1;
    fx.structure = make_threshold(2, 1, static_cast<int>(n));
    return fx;
}

} // namespace fixtures
} // namespace mmsplab

#endif // MMSPLAB_FIXTURES_HPP_
