#include "intdeg/symbolic.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "intdeg/exactlin.hpp"

namespace intdeg {

namespace {

using Key = std::pair<unsigned long, std::vector<unsigned>>;  // t-exponent first

Key key_of(const SymTerm& t) { return {t.t_exp, t.sym_exp}; }

} // namespace

void SymbolicElement::canonicalize() {
    std::map<Key, Int> acc;
    for (SymTerm& t : terms_) {
        if (t.sym_exp.size() != nsyms_)
            throw math_error("symbolic term has wrong symbol width");
        acc[key_of(t)] += t.coeff;
    }
    terms_.clear();
    for (auto& [key, coeff] : acc) {
        if (coeff == 0) continue;
        terms_.push_back(SymTerm{coeff, key.second, key.first});
    }
}

SymbolicElement SymbolicElement::term(std::size_t nsyms, Int coeff,
                                      std::vector<unsigned> sym_exp,
                                      unsigned long t_exp) {
    SymbolicElement e(nsyms);
    e.terms_.push_back(SymTerm{std::move(coeff), std::move(sym_exp), t_exp});
    e.canonicalize();
    return e;
}

SymbolicElement SymbolicElement::symbol(std::size_t nsyms, std::size_t i) {
    std::vector<unsigned> exp(nsyms, 0);
    exp.at(i) = 1;
    return term(nsyms, Int(1), std::move(exp), 0);
}

SymbolicElement SymbolicElement::operator+(const SymbolicElement& o) const {
    if (nsyms_ != o.nsyms_) throw math_error("symbol universes differ");
    SymbolicElement e(nsyms_);
    e.terms_ = terms_;
    e.terms_.insert(e.terms_.end(), o.terms_.begin(), o.terms_.end());
    e.canonicalize();
    return e;
}

SymbolicElement SymbolicElement::negate() const {
    SymbolicElement e(nsyms_);
    e.terms_ = terms_;
    for (SymTerm& t : e.terms_) t.coeff = -t.coeff;
    return e;
}

SymbolicElement SymbolicElement::operator-(const SymbolicElement& o) const {
    return *this + o.negate();
}

SymbolicElement SymbolicElement::operator*(const SymbolicElement& o) const {
    if (nsyms_ != o.nsyms_) throw math_error("symbol universes differ");
    SymbolicElement e(nsyms_);
    for (const SymTerm& a : terms_)
        for (const SymTerm& b : o.terms_) {
            SymTerm t;
            t.coeff = a.coeff * b.coeff;
            t.sym_exp.resize(nsyms_);
            for (std::size_t i = 0; i < nsyms_; ++i)
                t.sym_exp[i] = a.sym_exp[i] + b.sym_exp[i];
            t.t_exp = a.t_exp + b.t_exp;
            e.terms_.push_back(std::move(t));
        }
    e.canonicalize();
    return e;
}

SymbolicElement SymbolicElement::pow(unsigned n) const {
    SymbolicElement acc = term(nsyms_, Int(1), std::vector<unsigned>(nsyms_, 0), 0);
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

SymbolicElement SymbolicElement::reduce_mod(unsigned p) const {
    if (p == 0) return *this;
    SymbolicElement e(nsyms_);
    for (const SymTerm& t : terms_) {
        Int c = t.coeff % Int(p);
        if (c < 0) c += p;
        if (c == 0) continue;
        e.terms_.push_back(SymTerm{c, t.sym_exp, t.t_exp});
    }
    e.canonicalize();
    return e;
}

std::string SymbolicElement::to_string(const std::vector<unsigned long>& gen_labels) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const SymTerm& t : terms_) {
        if (!first) os << (t.coeff >= 0 ? " + " : " - ");
        else if (t.coeff < 0) os << "-";
        first = false;
        Int a = abs(t.coeff);
        bool printed = false;
        if (a != 1) {
            os << a.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < nsyms_; ++i) {
            if (t.sym_exp[i] == 0) continue;
            if (printed) os << "*";
            os << "c" << (i < gen_labels.size() ? std::to_string(gen_labels[i])
                                                : std::to_string(i));
            if (t.sym_exp[i] > 1) os << "^" << t.sym_exp[i];
            printed = true;
        }
        if (t.t_exp > 0) {
            if (printed) os << "*";
            os << "t";
            if (t.t_exp > 1) os << "^" << t.t_exp;
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

namespace {

// generic element x = sum_g c_g t^g over the module generators
SymbolicElement generic_element(const std::vector<unsigned long>& gens) {
    SymbolicElement x = SymbolicElement::zero(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<unsigned> e(gens.size(), 0);
        e[i] = 1;
        x = x + SymbolicElement::term(gens.size(), Int(1), std::move(e), gens[i]);
    }
    return x;
}

} // namespace

CheckResult certificate_check(const NumericalSemigroup& sa,
                              const std::vector<unsigned long>& gens,
                              const Certificate& cert, unsigned characteristic) {
    if (cert.n < 1) throw math_error("certificate degree must be at least 1");
    if (cert.lower_coeffs.size() != cert.n - 1)
        throw math_error("certificate must supply exactly n-1 lower coefficients");
    for (const SymbolicElement& a : cert.lower_coeffs)
        if (a.symbol_count() != gens.size())
            throw math_error("certificate symbol width does not match the generators");
    CheckResult res;
    SymbolicElement x = generic_element(gens);
    SymbolicElement acc = x.pow(cert.n);
    for (unsigned i = 1; i < cert.n; ++i)
        acc = acc + cert.lower_coeffs[i - 1] * x.pow(cert.n - i);
    res.residual = acc.negate().reduce_mod(characteristic);
    for (unsigned i = 1; i < cert.n; ++i) {
        SymbolicElement ai = cert.lower_coeffs[i - 1].reduce_mod(characteristic);
        for (const SymTerm& t : ai.terms())
            if (!sa.contains(t.t_exp)) {
                res.valid = false;
                res.failing = FailingTerm{"a_" + std::to_string(i), t};
                return res;
            }
    }
    for (const SymTerm& t : res.residual.terms())
        if (!sa.contains(t.t_exp)) {
            res.valid = false;
            res.failing = FailingTerm{"residual", t};
            return res;
        }
    res.valid = true;
    return res;
}

std::optional<Certificate> certificate_search(const NumericalSemigroup& sa,
                                              const std::vector<unsigned long>& gens,
                                              unsigned n, unsigned long exponent_cap) {
    if (n < 1) throw math_error("certificate degree must be at least 1");
    const std::size_t ns = gens.size();
    SymbolicElement x = generic_element(gens);

    // ansatz basis entries for each a_i: symbol monomial of degree i (i <= 2)
    // times t^e, e in S_A up to the cap
    struct AnsatzEntry {
        unsigned i;  // which coefficient a_i
        SymbolicElement expanded;  // basis element * x^{n-i}
        SymbolicElement basis;
    };
    std::vector<AnsatzEntry> entries;
    std::vector<unsigned long> exps;
    for (unsigned long e = 0; e <= exponent_cap; ++e)
        if (sa.contains(e)) exps.push_back(e);
    std::vector<std::vector<unsigned>> monos1, monos2;
    for (std::size_t i = 0; i < ns; ++i) {
        std::vector<unsigned> m(ns, 0);
        m[i] = 1;
        monos1.push_back(m);
    }
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = i; j < ns; ++j) {
            std::vector<unsigned> m(ns, 0);
            m[i] += 1;
            m[j] += 1;
            monos2.push_back(m);
        }
    for (unsigned i = 1; i < n; ++i) {
        if (i > 2) continue;  // ansatz limited to products of at most 2 symbols
        const auto& monos = (i == 1) ? monos1 : monos2;
        for (const auto& mono : monos)
            for (unsigned long e : exps) {
                SymbolicElement basis = SymbolicElement::term(ns, Int(1), mono, e);
                entries.push_back(AnsatzEntry{i, basis * x.pow(n - i), basis});
            }
    }

    // cancellation conditions: coefficients of terms with t-exponent
    // outside S_A must vanish in x^n + sum lambda_u * entry_u
    SymbolicElement base = x.pow(n);
    std::map<Key, std::size_t> row_of;
    auto row_index = [&](const Key& k) -> std::size_t {
        auto it = row_of.find(k);
        if (it != row_of.end()) return it->second;
        std::size_t idx = row_of.size();
        row_of.emplace(k, idx);
        return idx;
    };
    std::vector<std::vector<std::pair<std::size_t, Int>>> cols(entries.size());
    std::vector<std::pair<std::size_t, Int>> rhs_entries;
    for (const SymTerm& t : base.terms())
        if (!sa.contains(t.t_exp)) rhs_entries.emplace_back(row_index(key_of(t)), t.coeff);
    for (std::size_t u = 0; u < entries.size(); ++u)
        for (const SymTerm& t : entries[u].expanded.terms())
            if (!sa.contains(t.t_exp))
                cols[u].emplace_back(row_index(key_of(t)), t.coeff);

    const std::size_t nrows = row_of.size();
    IntMatrix sys(nrows, entries.size());
    IntVec rhs(nrows);
    for (auto& [row, c] : rhs_entries) rhs[row] -= c;
    for (std::size_t u = 0; u < entries.size(); ++u)
        for (auto& [row, c] : cols[u]) sys.at(row, u) += c;
    auto sol = solve_linear(sys, rhs);
    if (!sol) return std::nullopt;

    Certificate cert;
    cert.n = n;
    for (unsigned i = 1; i < n; ++i) cert.lower_coeffs.push_back(SymbolicElement::zero(ns));
    for (std::size_t u = 0; u < entries.size(); ++u) {
        const Int& lambda = (*sol)[u];
        if (lambda == 0) continue;
        SymbolicElement scaled =
            SymbolicElement::term(ns, lambda, std::vector<unsigned>(ns, 0), 0) *
            entries[u].basis;
        cert.lower_coeffs[entries[u].i - 1] = cert.lower_coeffs[entries[u].i - 1] + scaled;
    }
    if (!certificate_check(sa, gens, cert).valid)
        throw internal_error("searched certificate fails its own check");
    return cert;
}

namespace {

// dense integer polynomials in t, used for the concrete re-verification
using ZtPoly = std::vector<Int>;

ZtPoly zt_mul(const ZtPoly& a, const ZtPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZtPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

void zt_add(ZtPoly& a, const ZtPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

ZtPoly zt_pow(const ZtPoly& a, unsigned n) {
    ZtPoly acc{Int(1)};
    for (unsigned i = 0; i < n; ++i) acc = zt_mul(acc, a);
    return acc;
}

bool zt_supported(const ZtPoly& a, const NumericalSemigroup& sa) {
    for (std::size_t e = 0; e < a.size(); ++e)
        if (a[e] != 0 && !sa.contains(e)) return false;
    return true;
}

ZtPoly eval_symbolic(const SymbolicElement& elt, const std::vector<ZtPoly>& subst) {
    ZtPoly acc;
    for (const SymTerm& t : elt.terms()) {
        ZtPoly term{t.coeff};
        for (std::size_t i = 0; i < t.sym_exp.size(); ++i)
            for (unsigned k = 0; k < t.sym_exp[i]; ++k) term = zt_mul(term, subst[i]);
        ZtPoly shifted(t.t_exp, Int(0));
        shifted.insert(shifted.end(), term.begin(), term.end());
        zt_add(acc, shifted);
    }
    return acc;
}

} // namespace

bool certificate_numeric_check(const NumericalSemigroup& sa,
                               const std::vector<unsigned long>& gens,
                               const Certificate& cert, int trials,
                               std::mt19937_64& rng) {
    const std::size_t ns = gens.size();
    std::vector<unsigned long> exps;
    const unsigned long hi = static_cast<unsigned long>(sa.frobenius() + 1) +
                             2 * sa.max_generator();
    for (unsigned long e = 0; e <= hi; ++e)
        if (sa.contains(e)) exps.push_back(e);
    std::uniform_int_distribution<std::size_t> pick_exp(0, exps.size() - 1);
    std::uniform_int_distribution<int> pick_coeff(-3, 3);
    std::uniform_int_distribution<int> pick_nterms(1, 3);
    for (int trial = 0; trial < trials; ++trial) {
        // random substitution: each symbol becomes an S_A-supported polynomial
        std::vector<ZtPoly> subst;
        for (std::size_t i = 0; i < ns; ++i) {
            ZtPoly p;
            int nterms = pick_nterms(rng);
            for (int k = 0; k < nterms; ++k) {
                unsigned long e = exps[pick_exp(rng)];
                if (p.size() <= e) p.resize(e + 1);
                p[e] += pick_coeff(rng);
            }
            subst.push_back(std::move(p));
        }
        // concrete x = sum subst_i * t^{g_i}
        ZtPoly x;
        for (std::size_t i = 0; i < ns; ++i) {
            ZtPoly shifted(gens[i], Int(0));
            shifted.insert(shifted.end(), subst[i].begin(), subst[i].end());
            zt_add(x, shifted);
        }
        ZtPoly acc = zt_pow(x, cert.n);
        for (unsigned i = 1; i < cert.n; ++i) {
            ZtPoly ai = eval_symbolic(cert.lower_coeffs[i - 1], subst);
            if (!zt_supported(ai, sa)) return false;
            zt_add(acc, zt_mul(ai, zt_pow(x, cert.n - i)));
        }
        // the residual -(acc) is the last coefficient; it must live in A
        if (!zt_supported(acc, sa)) return false;
    }
    return true;
}

} // namespace intdeg
