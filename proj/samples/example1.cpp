// SPDX-License-Identifier: MIT
// Worked example: the three-player EA bundle over F_3. Checks the access
// structure, audits the entanglement-assisted scheme on both backends and
// runs the protocol for one message and one qualified set.

#include <cstdio>

#include "mmsplab/fixtures.hpp"
#include "mmsplab/quantum/protocols.hpp"

using namespace mmsplab;
using namespace mmsplab::quantum;

int main()
{
    const Fixture fx = fixtures::example1();
    std::printf("bundle %s: MMSP for its structure: %s\n", fx.name.c_str(), classify(fx.bundle, fx.structure) ? "yes" : "no");

    const EaScheme s = make_eass(fx.bundle, fx.structure);
    for (Backend b : {Backend::Dense, Backend::Symplectic}) {
        const AuditReport rep = ea_audit(s, b);
        std::printf("%s audit:", backend_name(b));
        for (const auto& item : rep.items) std::printf(" %s=%s", item.name.c_str(), item.ok ? "ok" : "failed");
        std::printf(" (%llu cases)\n", static_cast<unsigned long long>(rep.cases));
    }

    const VecGF m = VecGF::from_ints(fx.bundle.F.ctx(), {1, 2});
    const Transcript t = run_eass(s, m, subset_from_players({2, 3}), 7);
    for (const auto& e : t.entries) {
        std::printf("%s / %s:", e.role.c_str(), e.label.c_str());
        for (auto v : e.values) std::printf(" %lld", static_cast<long long>(v));
        std::printf("\n");
    }
    std::printf("decoded correctly: %s\n", t.success ? "yes" : "no");
    return t.success ? 0 : 1;
}
