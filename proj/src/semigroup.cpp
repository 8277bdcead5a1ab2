#include "odospec/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace odospec {

bool rank1_check(const std::vector<int>& orders) {
    if (orders.empty()) throw DomainError("rank-1 check needs at least one order");
    for (size_t i = 0; i < orders.size(); ++i)
        for (size_t j = i + 1; j < orders.size(); ++j)
            if (std::gcd(orders[i], orders[j]) == 1) return true;
    return orders.size() == 1 && orders[0] == 1;
}

NumericalSemigroup semigroup_from_generators(const std::vector<int>& gens, int bound) {
    if (gens.empty()) throw DomainError("semigroup needs at least one generator");
    for (int g : gens)
        if (g <= 0) throw DomainError("semigroup generators must be positive");
    NumericalSemigroup sg;
    sg.generators = gens;
    std::sort(sg.generators.begin(), sg.generators.end());
    sg.generators.erase(std::unique(sg.generators.begin(), sg.generators.end()),
                        sg.generators.end());

    int g = 0;
    for (int gen : sg.generators) g = std::gcd(g, gen);
    sg.coprime = (g == 1);

    if (bound < 0) {
        const int a = sg.generators[0];
        const int b = sg.generators.size() > 1 ? sg.generators[1] : a;
        bound = std::max(4 * a * b, 4 * a);
    }
    sg.bound = bound;
    sg.member.assign(static_cast<size_t>(bound) + 1, false);
    sg.member[0] = true;
    for (int d = 1; d <= bound; ++d)
        for (int gen : sg.generators)
            if (d >= gen && sg.member[static_cast<size_t>(d - gen)]) {
                sg.member[static_cast<size_t>(d)] = true;
                break;
            }

    // conductor: least d0 so that d0..bound are all members; only meaningful
    // when the generators are coprime
    if (sg.coprime) {
        int d0 = bound + 1;
        for (int d = bound; d >= 0 && sg.member[static_cast<size_t>(d)]; --d) d0 = d;
        sg.conductor = (d0 <= bound) ? d0 : -1;
        for (int d = 1; d < sg.conductor; ++d)
            if (!sg.member[static_cast<size_t>(d)]) sg.gaps.insert(d);
    } else {
        for (int d = 1; d <= bound; ++d)
            if (!sg.member[static_cast<size_t>(d)]) sg.gaps.insert(d);
    }
    return sg;
}

DiffOp element_of_order(const DiffOp& p, const DiffOp& q, int d) {
    const int m = p.order(), n = q.order();
    if (d < 0) throw DomainError("requested order must be non-negative");
    for (int b = 0; b * n <= d; ++b) {
        if ((d - b * n) % m != 0) continue;
        const int a = (d - b * n) / m;
        DiffOp r = op_multiply(op_pow(p, a), op_pow(q, b));
        if ((a + b > 0 && r.order() != d) || (a + b == 0 && d != 0))
            throw DomainError("constructed element has unexpected order"); // unreachable
        return r;
    }
    throw DomainError("order " + std::to_string(d) + " is not representable by the pair (" +
                      std::to_string(m) + "," + std::to_string(n) + ")");
}

CodimResult degree_via_codim(const NumericalSemigroup& sg, int d) {
    if (d < 0 || !sg.contains(d)) throw DomainError("d must be a member of the semigroup");
    if (sg.coprime && (sg.conductor < 0 || sg.bound < sg.conductor + d))
        throw DomainError("membership table bound is too small for this d");
    CodimResult res;
    // N \ (N + d) stabilizes above conductor + d: count below that cut
    const int cut = sg.coprime ? sg.conductor + d : sg.bound;
    for (int x = 0; x <= cut; ++x) {
        if (!sg.contains(x)) continue;
        const bool shifted = x >= d && sg.contains(x - d);
        if (!shifted) ++res.count;
    }
    res.equals_d = (res.count == d);
    return res;
}

} // namespace odospec
