#include "intdeg/semigroups.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace intdeg {

namespace {
constexpr unsigned long kMaxGenerator = 1000000;
} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<unsigned long> generators)
    : gens_(std::move(generators)) {
    if (gens_.empty()) throw math_error("semigroup needs at least one generator");
    for (unsigned long g : gens_)
        if (g == 0) throw math_error("semigroup generators must be positive");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.back() > kMaxGenerator)
        throw math_error("generator " + std::to_string(gens_.back()) + " is too large");
    unsigned long g = gens_[0];
    for (unsigned long x : gens_) g = std::gcd(g, x);
    if (g != 1)
        throw math_error("gcd of the generators is " + std::to_string(g) +
                         ", not 1; divide the generators by " + std::to_string(g) +
                         " to normalize");
    // grow the membership table until min_generator() consecutive members
    // appear; from there on everything is a member
    const unsigned long need = gens_.front();
    const unsigned long hard_cap =
        gens_.back() * (gens_.back() + gens_.size()) + gens_.back() + 2;
    member_.assign(1, true);  // 0 is a member
    unsigned long run = (need == 1) ? 1 : 0;
    long last_gap = -1;
    unsigned long m = 0;
    while (run < need) {
        ++m;
        if (m > hard_cap) throw internal_error("semigroup membership table overflow");
        bool in = false;
        for (unsigned long gen : gens_) {
            if (gen > m) break;
            if (member_[m - gen]) {
                in = true;
                break;
            }
        }
        member_.push_back(in);
        if (in) ++run;
        else {
            run = 0;
            last_gap = static_cast<long>(m);
        }
    }
    frobenius_ = last_gap;
    // keep the table up to frobenius + max generator
    const unsigned long want = static_cast<unsigned long>(frobenius_ + 1) + gens_.back();
    while (member_.size() <= want) {
        unsigned long next = member_.size();
        bool in = false;
        for (unsigned long gen : gens_) {
            if (gen > next) break;
            if (member_[next - gen]) {
                in = true;
                break;
            }
        }
        member_.push_back(in);
    }
}

bool NumericalSemigroup::contains(unsigned long m) const {
    if (m < member_.size()) return member_[m];
    return static_cast<long>(m) > frobenius_;
}

unsigned monomial_degree(const NumericalSemigroup& sa, unsigned long m) {
    if (m == 0) return 1;
    const unsigned long bound = static_cast<unsigned long>(sa.frobenius() + 1);
    for (unsigned long i = 1; i <= std::max(1ul, bound); ++i)
        if (sa.contains(i * m)) return static_cast<unsigned>(i);
    throw internal_error("monomial degree exceeded the frobenius bound");
}

SemigroupExtension::SemigroupExtension(NumericalSemigroup a, NumericalSemigroup b)
    : A(std::move(a)), B(std::move(b)) {
    for (unsigned long g : A.generators())
        if (!B.contains(g))
            throw math_error("generator " + std::to_string(g) +
                             " of the subring semigroup is not in the big semigroup");
}

ModuleGenerators module_generators(const SemigroupExtension& ext) {
    const auto& sa = ext.A;
    const auto& sb = ext.B;
    const unsigned long bound =
        static_cast<unsigned long>(sb.frobenius() + 1) + sa.min_generator();
    ModuleGenerators out;
    for (unsigned long s = 0; s <= bound; ++s) {
        if (!sb.contains(s)) continue;
        bool decomposable = false;
        for (unsigned long a = 1; a <= s && !decomposable; ++a)
            decomposable = sa.contains(a) && sb.contains(s - a);
        if (!decomposable) out.gens.push_back(s);
    }
    // Nakayama soundness: up to a comfortable bound, every S_B element is
    // generator + S_A
    const unsigned long check_bound = bound + static_cast<unsigned long>(sa.frobenius() + 1) +
                                      sa.max_generator() + sb.max_generator();
    for (unsigned long s = 0; s <= check_bound; ++s) {
        if (!sb.contains(s)) continue;
        bool ok = false;
        for (unsigned long g : out.gens) {
            if (g > s) break;
            if (sa.contains(s - g)) {
                ok = true;
                break;
            }
        }
        if (!ok) throw internal_error("module generators fail to generate");
    }
    return out;
}

DegreeBounds degree_bounds(const SemigroupExtension& ext) {
    DegreeBounds out;
    out.lower = 1;
    if (ext.A.frobenius() >= 0) {
        for (unsigned long m = 1; m <= static_cast<unsigned long>(ext.A.frobenius()); ++m)
            if (ext.B.contains(m))
                out.lower = std::max(out.lower, monomial_degree(ext.A, m));
    }
    out.upper = static_cast<unsigned>(module_generators(ext).mu());
    if (out.lower > out.upper) throw internal_error("degree bounds are inverted");
    return out;
}

} // namespace intdeg
