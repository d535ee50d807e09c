#include "thetalab/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "thetalab/errors.hpp"

namespace thetalab {

IntPoly::IntPoly(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_plus_x_pow(std::size_t n) {
    std::vector<Integer> v(n + 1);
    v[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) v[i] = v[i - 1] * (n - i + 1) / i;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_x_pow(std::size_t n) {
    auto p = one_plus_x_pow(n);
    for (std::size_t i = 1; i < p.coeffs_.size(); i += 2) p.coeffs_[i] = -p.coeffs_[i];
    return p;
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

IntPoly& IntPoly::operator+=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divided_by_x_pow(std::size_t k) const {
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) throw ConsistencyError("division by x^k is not exact");
    if (coeffs_.size() <= k) return {};
    return IntPoly(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

IntPoly IntPoly::divided_by_one_minus_x() const {
    // q_i = p_0 + ... + p_i; exact iff the full sum vanishes
    std::vector<Integer> q(coeffs_.size());
    Integer running = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        running += coeffs_[i];
        q[i] = running;
    }
    if (running != 0) throw ConsistencyError("division by (1 - x) is not exact");
    return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<std::string> IntPoly::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

IntPoly reverse(const IntPoly& p, std::size_t n) {
    if (p.is_zero()) return {};
    if (*p.degree() > n) throw PreconditionError("reverse: degree exceeds window");
    std::vector<Integer> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) v[n - i] = p.coeff(i);
    return IntPoly(std::move(v));
}

bool is_symmetric(const IntPoly& p, std::size_t n) {
    if (p.is_zero()) return true;
    if (*p.degree() > n) return false;
    for (std::size_t i = 0; i <= n; ++i)
        if (p.coeff(i) != p.coeff(n - i)) return false;
    return true;
}

namespace {

std::vector<std::size_t> peaks_of(const std::vector<Integer>& a) {
    std::vector<std::size_t> out;
    if (a.empty()) return out;
    const std::size_t m = a.size();
    // rising[k]: a_0 <= ... <= a_k ; falling[k]: a_k >= ... >= a_{m-1}
    std::vector<bool> rising(m), falling(m);
    rising[0] = true;
    for (std::size_t k = 1; k < m; ++k) rising[k] = rising[k - 1] && a[k - 1] <= a[k];
    falling[m - 1] = true;
    for (std::size_t k = m - 1; k-- > 0;) falling[k] = falling[k + 1] && a[k] >= a[k + 1];
    for (std::size_t k = 0; k < m; ++k)
        if (rising[k] && falling[k]) out.push_back(k);
    return out;
}

}  // namespace

bool is_unimodal(const IntPoly& p) {
    return p.is_zero() || !peaks_of(p.coefficients()).empty();
}

bool is_unimodal(const IntPoly& p, std::size_t n) {
    if (p.is_zero()) return true;
    if (*p.degree() > n) throw PreconditionError("is_unimodal: degree exceeds window");
    std::vector<Integer> a(n + 1);
    for (std::size_t i = 0; i <= n; ++i) a[i] = p.coeff(i);
    return !peaks_of(a).empty();
}

std::vector<std::size_t> unimodal_peaks(const IntPoly& p) { return peaks_of(p.coefficients()); }

bool is_nonnegative(const IntPoly& p) {
    const auto& c = p.coefficients();
    return std::all_of(c.begin(), c.end(), [](const Integer& a) { return a >= 0; });
}

bool dominates(const IntPoly& a, const IntPoly& b) { return is_nonnegative(a - b); }

IntPoly GammaVector::reconstruct() const {
    IntPoly out;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        out += IntPoly::one_plus_x_pow(center - 2 * i).shifted(i) * gamma[i];
    }
    return out;
}

IntPoly GammaVector::as_poly() const { return IntPoly(gamma); }

bool GammaVector::is_nonnegative() const {
    return std::all_of(gamma.begin(), gamma.end(), [](const Integer& g) { return g >= 0; });
}

std::optional<GammaVector> gamma_vector(const IntPoly& p, std::size_t n) {
    if (!is_symmetric(p, n)) return std::nullopt;
    GammaVector g;
    g.center = n;
    IntPoly rest = p;
    for (std::size_t i = 0; i <= n / 2; ++i) {
        const Integer c = rest.coeff(i);
        g.gamma.push_back(c);
        if (c != 0) rest -= IntPoly::one_plus_x_pow(n - 2 * i).shifted(i) * c;
    }
    if (!rest.is_zero()) throw ConsistencyError("gamma peeling left a remainder");
    return g;
}

bool is_gamma_positive(const IntPoly& p, std::size_t n) {
    auto g = gamma_vector(p, n);
    return g && g->is_nonnegative();
}

SymDecomp symmetric_decomposition(const IntPoly& p, std::size_t n) {
    const IntPoly rev = reverse(p, n);
    SymDecomp d;
    d.n = n;
    d.a = (p - rev.shifted(1)).divided_by_one_minus_x();
    d.b = rev - d.a;
    if (d.a + d.b.shifted(1) != p || !is_symmetric(d.a, n) ||
        (n >= 1 ? !is_symmetric(d.b, n - 1) : !d.b.is_zero()))
        throw ConsistencyError("symmetric decomposition invariants violated");
    return d;
}

namespace {

using RatVec = std::vector<Rational>;

void trim(RatVec& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a / b over Q; b nonzero.
RatVec rem(RatVec a, const RatVec& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RatVec quotient(RatVec a, const RatVec& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    RatVec q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return q;
}

RatVec derivative(const RatVec& p) {
    RatVec d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long long>(i));
    trim(d);
    return d;
}

RatVec gcd(RatVec a, RatVec b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatVec r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

RatVec to_rat(const IntPoly& p) {
    RatVec out;
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return out;
}

std::size_t sturm_distinct_real_roots(const RatVec& p) {
    if (p.size() <= 1) return 0;
    std::vector<RatVec> seq{p, derivative(p)};
    while (seq.back().size() > 1) {
        RatVec r = rem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    auto changes = [&](bool at_plus_infinity) {
        int count = 0, last = 0;
        for (const auto& q : seq) {
            if (q.empty()) continue;
            int s = sign(q.back());
            if (!at_plus_infinity && (q.size() - 1) % 2 == 1) s = -s;
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    };
    return static_cast<std::size_t>(changes(false) - changes(true));
}

}  // namespace

std::size_t count_distinct_real_roots(const IntPoly& p) { return sturm_distinct_real_roots(to_rat(p)); }

bool is_real_rooted(const IntPoly& p) {
    if (p.is_zero() || *p.degree() == 0) return true;
    RatVec f = to_rat(p);
    // strip the root at zero
    std::size_t low = 0;
    while (f[low] == 0) ++low;
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
    if (f.size() <= 1) return true;
    // squarefree part f / gcd(f, f') has only simple roots
    RatVec g = gcd(f, derivative(f));
    RatVec sqfree = g.size() > 1 ? quotient(f, g) : f;
    return sturm_distinct_real_roots(sqfree) == sqfree.size() - 1;
}

bool is_alternatingly_increasing(const IntPoly& h, std::size_t n) {
    if (n == 0) return true;
    std::vector<Integer> seq;
    std::size_t lo = 0, hi = n - 1;
    bool take_low = true;
    while (lo <= hi) {
        if (take_low) {
            seq.push_back(h.coeff(lo++));
        } else {
            seq.push_back(h.coeff(hi));
            if (hi == 0) break;
            --hi;
        }
        take_low = !take_low;
    }
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i - 1] > seq[i]) return false;
    return true;
}

IntPoly pnk(std::size_t n, std::size_t k) {
    if (k > n) throw PreconditionError("pnk: k out of range");
    static std::shared_mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, IntPoly> memo;
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
    }
    IntPoly result;
    if (n == 0) {
        result = IntPoly{1};
    } else {
        IntPoly low, high;
        for (std::size_t i = 0; i < k; ++i) low += pnk(n - 1, i);
        // p_{n-1,n} does not exist and counts as zero
        for (std::size_t i = k; i <= n - 1; ++i) high += pnk(n - 1, i);
        result = low.shifted(1) + high;
    }
    std::unique_lock lock(mutex);
    memo.emplace(std::make_pair(n, k), result);
    return result;
}

}  // namespace thetalab
