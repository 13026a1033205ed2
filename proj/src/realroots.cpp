#include "poscert/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace poscert {

std::vector<Rat> power_sums(const UniPoly& p, int count) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("power_sums needs a monic polynomial");
    if (count < 0) throw std::invalid_argument("negative count");
    const int m = p.degree();
    std::vector<Rat> s(count);
    if (count == 0) return s;
    s[0] = m;
    for (int k = 1; k < count; ++k) {
        // Newton: s_k + sum_{i=1}^{min(k-1,m)} c_{m-i} s_{k-i} + [k<=m] k c_{m-k} = 0.
        Rat acc = 0;
        const int top = std::min(k - 1, m);
        for (int i = 1; i <= top; ++i) acc += p.coeff(m - i) * s[k - i];
        if (k <= m) acc += Rat(k) * p.coeff(m - k);
        s[k] = -acc;
    }
    return s;
}

SymMatrix trace_form(const UniPoly& p, const UniPoly& u) {
    if (p.is_zero() || !p.is_monic()) throw std::invalid_argument("trace_form needs a monic polynomial");
    const int m = p.degree();
    if (m < 1) throw std::invalid_argument("trace_form needs degree >= 1");
    const UniPoly u_red = u.divmod(p).second;
    const int du = u_red.is_zero() ? 0 : u_red.degree();
    const std::vector<Rat> s = power_sums(p, 2 * (m - 1) + du + 1);

    SymMatrix q(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            // tr(u t^{i+j}) = sum_k u_k s_{i+j+k}; the trace of multiplication
            // by t^w equals s_w for every w >= 0.
            Rat entry = 0;
            for (int k = 0; k <= u_red.degree(); ++k)
                if (u_red.coeff(k) != 0) entry += u_red.coeff(k) * s[i + j + k];
            q.set(i, j, entry);
        }
    return q;
}

RootCounts sylvester_root_counts(const UniPoly& p) {
    if (p.is_zero() || !p.is_monic())
        throw std::invalid_argument("sylvester_root_counts needs a monic polynomial");
    if (p.coeff(0) == 0)
        throw std::invalid_argument(
            "sylvester_root_counts requires p(0) != 0; divide out the root at 0 first");
    if (p.degree() == 0) return {0, 0};
    const SignatureReport q1 = signature(trace_form(p, UniPoly::constant(1)));
    const SignatureReport qt = signature(trace_form(p, UniPoly::term(1, 1)));
    RootCounts counts;
    counts.real_roots = q1.sig();
    counts.positive_real_roots = (q1.sig() + qt.sig()) / 2;
    return counts;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(1);
    const UniPoly g = unipoly_gcd(p, p.derivative());
    return p.divide_exact(g).make_monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero polynomial");
    std::vector<std::pair<UniPoly, int>> result;
    UniPoly f = p.make_monic();
    if (f.degree() == 0) return result;
    // Yun's algorithm.
    UniPoly u = unipoly_gcd(f, f.derivative());
    UniPoly v = f.divide_exact(u);
    UniPoly w = f.derivative().divide_exact(u);
    int i = 1;
    while (v.degree() > 0) {
        const UniPoly z = w - v.derivative();
        UniPoly s = unipoly_gcd(v, z);
        if (s.degree() > 0) result.emplace_back(s, i);
        v = v.divide_exact(s);
        w = z.divide_exact(s);
        ++i;
    }
    return result;
}

UniPoly odd_multiplicity_part(const UniPoly& p) {
    UniPoly odd = UniPoly::constant(1);
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        if (mult % 2 == 1) odd = odd * factor;
    return odd;
}

// ---------------------------------------------------------------------------
// Sturm machinery

namespace {

int sign_at(const UniPoly& p, const Extended& x) {
    switch (x.kind) {
        case Extended::Kind::PosInf:
            return sgn(p.leading());
        case Extended::Kind::NegInf:
            return p.degree() % 2 == 0 ? sgn(p.leading()) : -sgn(p.leading());
        case Extended::Kind::Finite:
        default:
            return sgn(p(x.value));
    }
}

class SturmChain {
  public:
    explicit SturmChain(const UniPoly& p) {
        UniPoly f = primitive_scale(p);
        UniPoly g = primitive_scale(f.derivative());
        chain_.push_back(f);
        while (!g.is_zero()) {
            UniPoly r = -(chain_.back().divmod(g).second);
            chain_.push_back(std::move(g));
            g = primitive_scale(r);
        }
    }

    int variations(const Extended& x) const {
        int count = 0, prev = 0;
        for (const UniPoly& q : chain_) {
            const int s = q.is_zero() ? 0 : sign_at(q, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    int count(const Extended& a, const Extended& b) const { return variations(a) - variations(b); }

  private:
    std::vector<UniPoly> chain_;
};

void isolate_rec(const SturmChain& chain, const UniPoly& sf, const Rat& lo, const Rat& hi,
                 int roots_inside, std::vector<RootInterval>& out) {
    if (roots_inside == 0) return;
    if (roots_inside == 1) {
        out.push_back({lo, hi});
        return;
    }
    // Split point: the midpoint, nudged toward lo until it is not a root.
    Rat mid = (lo + hi) / 2;
    while (sf(mid) == 0) mid = (lo + mid) / 2;
    const int left = chain.count(Extended::at(lo), Extended::at(mid));
    isolate_rec(chain, sf, lo, mid, left, out);
    isolate_rec(chain, sf, mid, hi, roots_inside - left, out);
}

}  // namespace

int sturm_count(const UniPoly& p, const Extended& a, const Extended& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count of zero polynomial");
    if (a.kind == Extended::Kind::Finite && p(a.value) == 0)
        throw std::invalid_argument("sturm_count endpoint is a root");
    if (b.kind == Extended::Kind::Finite && p(b.value) == 0)
        throw std::invalid_argument("sturm_count endpoint is a root");
    if (p.degree() == 0) return 0;
    return SturmChain(p).count(a, b);
}

Rat cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    Rat max = 0;
    for (int k = 0; k < p.degree(); ++k) {
        Rat r = abs(p.coeff(k) / p.leading());
        if (r > max) max = r;
    }
    return max + 1;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& sf, const Rat& lo, const Rat& hi) {
    if (sf.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
    if (sf(lo) == 0 || sf(hi) == 0)
        throw std::invalid_argument("isolation endpoints must not be roots");
    std::vector<RootInterval> out;
    if (sf.degree() == 0 || lo >= hi) return out;
    const SturmChain chain(sf);
    isolate_rec(chain, sf, lo, hi, chain.count(Extended::at(lo), Extended::at(hi)), out);
    return out;
}

// ---------------------------------------------------------------------------
// Ray predicates

namespace {

void require_positive_leading(const UniPoly& p, const char* who) {
    if (p.is_zero()) throw std::invalid_argument(std::string(who) + " of zero polynomial");
    if (p.leading() <= 0)
        throw std::invalid_argument(std::string(who) + " needs a positive leading coefficient");
}

bool all_coeffs_nonneg(const UniPoly& p) {
    for (const Rat& c : p.coeffs())
        if (c < 0) return false;
    return true;
}

}  // namespace

bool is_nonneg_on_ray(const UniPoly& p) {
    require_positive_leading(p, "is_nonneg_on_ray");
    if (all_coeffs_nonneg(p)) return true;  // sum of nonnegative terms on t >= 0
    const UniPoly q = p.shift_down(p.valuation_at_zero());
    if (q.coeff(0) < 0) return false;
    const UniPoly odd = odd_multiplicity_part(q);
    if (odd.degree() == 0) return true;
    return sturm_count(odd, Extended::at(0), Extended::pos_inf()) == 0;
}

bool is_positive_on_ray(const UniPoly& p) {
    require_positive_leading(p, "is_positive_on_ray");
    if (p.coeff(0) <= 0) return false;
    if (all_coeffs_nonneg(p)) return true;
    const UniPoly sf = squarefree_part(p);
    return sylvester_root_counts(sf).positive_real_roots == 0;
}

std::optional<Rat> find_negative_on_ray(const UniPoly& p) {
    require_positive_leading(p, "find_negative_on_ray");
    if (p.coeff(0) < 0) return Rat(0);
    const int k = p.valuation_at_zero();
    const UniPoly q = p.shift_down(k);
    if (q.coeff(0) < 0) {
        // p(t) = t^k q(t) is negative just right of 0.
        Rat eps(1, 2);
        while (p(eps) >= 0) eps /= 2;
        return eps;
    }
    const UniPoly sf = squarefree_part(q);
    const Rat bound = cauchy_root_bound(sf);
    // Sign of p is constant between consecutive roots; the right endpoints of
    // the isolating intervals sample every gap after the first root.
    for (const RootInterval& iv : isolate_real_roots(sf, Rat(0), bound))
        if (p(iv.hi) < 0) return iv.hi;
    return std::nullopt;
}

std::optional<Rat> find_negative_real(const UniPoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.degree() == 0) return p.coeff(0) < 0 ? std::optional<Rat>(Rat(0)) : std::nullopt;
    const Rat bound = cauchy_root_bound(p);
    if (p.degree() % 2 == 1) return p.leading() > 0 ? -bound : bound;
    if (p.leading() < 0) return bound;
    if (auto t = find_negative_on_ray(p)) return t;
    // Mirror: p(-t) has the same (even-degree) leading coefficient.
    std::vector<Rat> mirrored = p.coeffs();
    for (size_t i = 1; i < mirrored.size(); i += 2) mirrored[i] = -mirrored[i];
    if (auto t = find_negative_on_ray(UniPoly(std::move(mirrored)))) return -*t;
    return std::nullopt;
}

}  // namespace poscert
