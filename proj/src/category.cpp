#include "qrep/category.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace qrep {

int field_order_for_level(int level) { return (level % 2 == 0 ? 4 : 8) * (level + 2); }

Category::Category(int level) : k_(level) {
    if (level < 0 || level > 60) throw std::invalid_argument("level must lie in [0, 60]");
    field_ = CyclotomicField::get(field_order_for_level(k_));
    const long u = field_->order() / (4 * (k_ + 2));  // zeta^u = q^(1/4)
    const int nmax = 3 * k_ + 6;
    qint_.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        Scalar s = zero();
        for (int t = 0; t < n; ++t) s += root(2 * u * (n - 1 - 2 * t));
        qint_.push_back(s);
    }
    qfact_.push_back(one());
    for (int n = 1; n <= nmax; ++n) qfact_.push_back(qfact_.back() * qint_[n]);
    for (int n = 0; n <= k_ + 1; ++n) qfact_inv_.push_back(qfact_[n].inverse());
    for (int a = 0; a <= k_; ++a) twist_.push_back(root(u * a * (a + 2)));

    // D = sqrt((k+2)/2) / sin(pi/(k+2))
    Scalar sq = (k_ % 2 == 0) ? sqrt_integer(field_, (k_ + 2) / 2)
                              : sqrt_integer(field_, 2 * (k_ + 2)).scaled(mpq_class(1, 2));
    Scalar w = Scalar::root_of_unity(field_, 2 * (k_ + 2), 1);
    Scalar i = Scalar::root_of_unity(field_, 4, 1);
    Scalar sin_pi = (w - w.conj()) * (i * Scalar(field_, 2L)).inverse();
    global_dim_ = sq * sin_pi.inverse();
    if (global_dim_.to_complex().real() < 0) global_dim_ = -global_dim_;

    const int r = rank();
    delta_sq_.assign(static_cast<std::size_t>(r) * r * r, zero());
    for (int a = 0; a <= k_; ++a)
        for (int b = 0; b <= k_; ++b)
            for (int c : fusion_product(a, b))
                delta_sq_[(static_cast<std::size_t>(a) * r + b) * r + c] =
                    qfact_[(a + b - c) / 2] * qfact_[(a - b + c) / 2] * qfact_[(-a + b + c) / 2] *
                    qfact_inv((a + b + c) / 2 + 1);

    smatrix_ = Matrix(field_, rank(), rank());
    Scalar dinv = global_dim_.inverse();
    for (int a = 0; a <= k_; ++a)
        for (int b = 0; b <= k_; ++b) {
            Scalar s = zero();
            for (int c : fusion_product(a, b)) s += twist_[c] * qdim(c);
            smatrix_.at(a, b) = s * twist_[a].conj() * twist_[b].conj() * dinv;
        }
    for (int a = 0; a <= k_; ++a) {
        smatrix_.row_basis.push_back(std::to_string(a));
        smatrix_.col_basis.push_back(std::to_string(a));
    }
}

std::vector<int> Category::labels() const {
    std::vector<int> l(rank());
    for (int a = 0; a <= k_; ++a) l[a] = a;
    return l;
}

bool Category::fusion(int a, int b, int c) const {
    if (a < 0 || b < 0 || c < 0 || a > k_ || b > k_ || c > k_) return false;
    if ((a + b + c) % 2) return false;
    return c >= std::abs(a - b) && c <= std::min(a + b, 2 * k_ - a - b);
}

std::vector<int> Category::fusion_product(int a, int b) const {
    if (a < 0 || b < 0 || a > k_ || b > k_) throw std::out_of_range("label out of range");
    std::vector<int> out;
    for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k_ - a - b); c += 2) out.push_back(c);
    return out;
}

const Scalar& Category::qint(int n) const { return qint_.at(n); }
const Scalar& Category::qfact(int n) const { return qfact_.at(n); }
const Scalar& Category::qfact_inv(int n) const {
    if (n < 0 || n > k_ + 1) throw std::domain_error("quantum factorial not invertible");
    return qfact_inv_[n];
}

Matrix Category::tmatrix() const {
    Matrix t(field_, rank(), rank());
    for (int a = 0; a <= k_; ++a) t.at(a, a) = twist_[a];
    t.row_basis = t.col_basis = smatrix_.row_basis;
    return t;
}

long Category::verlinde_dim(int genus) const {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1");
    Scalar d2 = zero();
    for (int a = 0; a <= k_; ++a) d2 += qdim(a) * qdim(a);
    Scalar total = zero();
    for (int a = 0; a <= k_; ++a) total += (d2 * (qdim(a) * qdim(a)).inverse()).pow(genus - 1);
    if (!total.is_rational() || total.rational().get_den() != 1)
        throw std::logic_error("Verlinde dimension is not an integer");
    return total.rational().get_num().get_si();
}

Scalar Category::delta_sq(int a, int b, int c) const {
    if (!fusion(a, b, c)) return zero();
    const std::size_t r = rank();
    return delta_sq_[(a * r + b) * r + c];
}

template <class Fn>
Scalar Category::memo(std::unordered_map<std::uint64_t, Scalar>& cache, std::uint64_t key, Fn&& compute) const {
    {
        std::shared_lock lock(mu_);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Scalar v = compute();
    std::unique_lock lock(mu_);
    cache.emplace(key, v);
    return v;
}

Scalar Category::racah_sum(int a, int b, int e, int c, int d, int f) const {
    const int t1 = (a + b + e) / 2, t2 = (e + c + d) / 2, t3 = (b + c + f) / 2, t4 = (a + f + d) / 2;
    const int p1 = (a + b + c + d) / 2, p2 = (a + c + e + f) / 2, p3 = (b + d + e + f) / 2;
    // The sum depends only on the multisets of triangle and quadrilateral sums.
    std::array<int, 4> t{t1, t2, t3, t4};
    std::array<int, 3> p{p1, p2, p3};
    std::sort(t.begin(), t.end());
    std::sort(p.begin(), p.end());
    std::uint64_t key = 0;
    for (int x : t) key = (key << 8) | static_cast<std::uint64_t>(x);
    for (int x : p) key = (key << 8) | static_cast<std::uint64_t>(x);
    return memo(racah_cache_, key, [&] { return racah_terms(t, p); });
}

Scalar Category::racah_terms(const std::array<int, 4>& t, const std::array<int, 3>& p) const {
    const int t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3], p1 = p[0], p2 = p[1], p3 = p[2];
    Scalar tot = zero();
    const int lo = std::max({t1, t2, t3, t4}), hi = std::min({p1, p2, p3});
    for (int z = lo; z <= hi; ++z) {
        const Scalar& top = qfact_[z + 1];
        if (top.is_zero()) continue;
        Scalar term = top * qfact_inv(z - t1) * qfact_inv(z - t2) * qfact_inv(z - t3) * qfact_inv(z - t4) *
                      qfact_inv(p1 - z) * qfact_inv(p2 - z) * qfact_inv(p3 - z);
        if (z % 2) tot -= term;
        else tot += term;
    }
    return tot;
}

namespace {
std::uint64_t pack(int a, int b, int c, int d, int e, int f, bool inv) {
    std::uint64_t key = inv ? 1 : 0;
    for (int x : {a, b, c, d, e, f}) key = (key << 6) | static_cast<std::uint64_t>(x);
    return key;
}
}  // namespace

Scalar Category::compute_F(int a, int b, int c, int d, int e, int f) const {
    Scalar v = qint_[f + 1] * delta_sq(b, c, f) * delta_sq(a, f, d) * racah_sum(a, b, e, c, d, f);
    return ((a + b + c + d) / 2) % 2 ? -v : v;
}

Scalar Category::F(int a, int b, int c, int d, int e, int f) const {
    if (!(fusion(a, b, e) && fusion(e, c, d) && fusion(b, c, f) && fusion(a, f, d))) return zero();
    return memo(fcache_, pack(a, b, c, d, e, f, false), [&] { return compute_F(a, b, c, d, e, f); });
}

Scalar Category::Finv(int a, int b, int c, int d, int f, int e) const {
    if (!(fusion(a, b, e) && fusion(e, c, d) && fusion(b, c, f) && fusion(a, f, d))) return zero();
    return memo(fcache_, pack(a, b, c, d, e, f, true), [&] {
        Scalar v = qint_[e + 1] * delta_sq(a, b, e) * delta_sq(e, c, d) * racah_sum(a, b, e, c, d, f);
        return ((a + b + c + d) / 2) % 2 ? -v : v;
    });
}

Scalar Category::braid_move(int pp, int a, int b, int pn, int pj, int e2, bool inverse) const {
    std::uint64_t key = pack(pp, a, b, pn, pj, e2, inverse);
    return memo(braid_cache_, key, [&] {
        Scalar v = zero();
        for (int e : fusion_product(a, b)) {
            Scalar f = F(pp, a, b, pn, pj, e);
            if (f.is_zero()) continue;
            Scalar w = Finv(pp, b, a, pn, e, e2);
            if (w.is_zero()) continue;
            v += f * (inverse ? Rinv(a, b, e) : R(a, b, e)) * w;
        }
        return v;
    });
}

Scalar Category::R(int a, int b, int c) const {
    if (!fusion(a, b, c)) return zero();
    const long u = field_->order() / (4 * (k_ + 2));
    const long x = c * (c + 2) - a * (a + 2) - b * (b + 2);
    Scalar r = root(u * x / 2);
    return ((a + b - c) / 2) % 2 ? -r : r;
}

Scalar Category::Rinv(int a, int b, int c) const { return R(b, a, c).conj(); }

std::vector<std::pair<std::uint64_t, Scalar>> Category::f_entries() const {
    std::shared_lock lock(mu_);
    std::vector<std::pair<std::uint64_t, Scalar>> out(fcache_.begin(), fcache_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

void Category::seed_f(std::uint64_t key, const Scalar& value) const {
    std::unique_lock lock(mu_);
    fcache_.emplace(key, value);
}

std::size_t Category::cache_size() const {
    std::shared_lock lock(mu_);
    return fcache_.size();
}

}  // namespace qrep
