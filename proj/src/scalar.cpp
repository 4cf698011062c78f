#include "qrep/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qrep {

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& div) {
    // Both ascending-coefficient, div monic.
    const std::size_t dn = div.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        long c = num[i];
        q[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * div[j];
    }
    return q;
}

std::vector<long> cyclotomic_polynomial(int n, std::map<int, std::vector<long>>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d, memo));
    memo[n] = p;
    return p;
}

}  // namespace

CyclotomicField::CyclotomicField(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::map<int, std::vector<long>> memo;
    poly_ = cyclotomic_polynomial(order, memo);
    degree_ = static_cast<int>(poly_.size()) - 1;
    const int count = std::max(2 * degree_, order_ + 1);
    powers_.assign(count, std::vector<long>(degree_, 0));
    for (int e = 0; e < count; ++e) {
        if (e < degree_) {
            powers_[e][e] = 1;
            continue;
        }
        const auto& prev = powers_[e - 1];
        auto& cur = powers_[e];
        const long top = prev[degree_ - 1];
        for (int i = degree_ - 1; i > 0; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        for (int i = 0; i < degree_; ++i) cur[i] -= top * poly_[i];
    }
    for (const auto& v : powers_)
        for (long x : v) max_red_ = std::max(max_red_, std::labs(x));
}

FieldPtr CyclotomicField::get(int order) {
    static std::mutex mu;
    static std::map<int, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[order];
    if (!slot) slot = std::make_shared<const CyclotomicField>(order);
    return slot;
}

namespace {

using Wide = __int128;
constexpr std::int64_t kSmallLimit = std::int64_t(1) << 62;

Wide wabs(Wide x) { return x < 0 ? -x : x; }

Wide wgcd(Wide a, Wide b) {
    a = wabs(a);
    b = wabs(b);
    while (b) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_wide(Wide x) {
    const bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
    std::uint64_t limbs[2] = {static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(u >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
    if (neg) z = -z;
    return z;
}

bool fits_small(const mpz_class& z) {
    return mpz_sizeinbase(z.get_mpz_t(), 2) < 62;
}

}  // namespace

void Scalar::set_wide(std::vector<Wide>& num, Wide den) {
    if (den < 0) {
        den = -den;
        for (auto& x : num) x = -x;
    }
    Wide g = den;
    bool zero = true;
    for (Wide x : num)
        if (x != 0) {
            zero = false;
            if (g != 1) g = wgcd(g, x);
        }
    if (zero) den = g = 1;
    bool small = true;
    if (g != 1) {
        den /= g;
        for (auto& x : num) x /= g;
    }
    small = den < kSmallLimit;
    for (Wide x : num) small = small && wabs(x) < kSmallLimit;
    if (small) {
        big_ = false;
        sn_.resize(num.size());
        for (std::size_t i = 0; i < num.size(); ++i) sn_[i] = static_cast<std::int64_t>(num[i]);
        sd_ = static_cast<std::int64_t>(den);
        num_.clear();
        return;
    }
    std::vector<mpz_class> bn(num.size());
    for (std::size_t i = 0; i < num.size(); ++i) bn[i] = mpz_from_wide(num[i]);
    set_big(bn, mpz_from_wide(den));
}

void Scalar::set_big(std::vector<mpz_class>& num, mpz_class den) {
    if (den < 0) {
        den = -den;
        for (auto& x : num) x = -x;
    }
    mpz_class g = den;
    bool zero = true;
    for (const auto& x : num)
        if (x != 0) {
            zero = false;
            if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        }
    if (zero) den = g = 1;
    if (g != 1) {
        for (auto& x : num) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    bool small = fits_small(den);
    for (const auto& x : num) small = small && fits_small(x);
    if (small) {
        big_ = false;
        sn_.resize(num.size());
        for (std::size_t i = 0; i < num.size(); ++i) sn_[i] = num[i].get_si();
        sd_ = den.get_si();
        num_.clear();
        return;
    }
    big_ = true;
    sn_.clear();
    num_ = std::move(num);
    den_ = std::move(den);
}

void Scalar::big_parts(std::vector<mpz_class>& num, mpz_class& den) const {
    if (big_) {
        num = num_;
        den = den_;
        return;
    }
    num.resize(sn_.size());
    for (std::size_t i = 0; i < sn_.size(); ++i) num[i] = static_cast<long>(sn_[i]);
    den = static_cast<long>(sd_);
}

Scalar::Scalar(FieldPtr field, long value) : field_(std::move(field)) {
    if (value > -(1L << 62) && value < (1L << 62)) {
        sn_.assign(field_->degree(), 0);
        sn_[0] = value;
        return;
    }
    std::vector<mpz_class> num(field_->degree(), mpz_class(0));
    num[0] = value;
    set_big(num, 1);
}

Scalar::Scalar(FieldPtr field, const mpq_class& value) : field_(std::move(field)) {
    std::vector<mpz_class> num(field_->degree(), mpz_class(0));
    num[0] = value.get_num();
    set_big(num, value.get_den());
}

Scalar Scalar::root(FieldPtr field, long power) {
    const long n = field->order();
    long e = ((power % n) + n) % n;
    Scalar r;
    r.field_ = field;
    const auto& v = field->reduced_power(static_cast<int>(e));
    r.sn_.assign(v.begin(), v.end());
    r.sd_ = 1;
    return r;
}

Scalar Scalar::root_of_unity(FieldPtr field, int order, long power) {
    if (order <= 0 || field->order() % order != 0)
        throw FieldMismatch("root of unity of order " + std::to_string(order) +
                            " is not in Q(zeta_" + std::to_string(field->order()) + ")");
    return root(field, power * (field->order() / order));
}

bool Scalar::is_zero() const {
    if (big_) return false;  // big values are never zero after normalization
    for (auto x : sn_)
        if (x) return false;
    return true;
}

bool Scalar::is_rational() const {
    if (big_) {
        for (std::size_t i = 1; i < num_.size(); ++i)
            if (num_[i] != 0) return false;
        return true;
    }
    for (std::size_t i = 1; i < sn_.size(); ++i)
        if (sn_[i]) return false;
    return true;
}

bool Scalar::is_one() const { return !big_ && is_rational() && sn_[0] == 1 && sd_ == 1; }

int Scalar::support() const {
    int w = 0;
    if (big_) {
        for (const auto& x : num_) w += (x != 0);
    } else {
        for (auto x : sn_) w += (x != 0);
    }
    return w;
}

mpq_class Scalar::coeff(int i) const {
    mpq_class q;
    if (big_) q = mpq_class(num_[i], den_);
    else q = mpq_class(mpz_class(static_cast<long>(sn_[i])), mpz_class(static_cast<long>(sd_)));
    q.canonicalize();
    return q;
}

std::vector<mpq_class> Scalar::coeffs() const {
    std::vector<mpq_class> out;
    for (int i = 0; i < field_->degree(); ++i) out.push_back(coeff(i));
    return out;
}

void Scalar::check_same(const Scalar& o) const {
    if (!field_ || !o.field_ || (field_ != o.field_ && field_->order() != o.field_->order()))
        throw FieldMismatch("operands live in different cyclotomic fields");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.sn_) x = -x;
    for (auto& x : r.num_) x = -x;
    return r;
}

Scalar Scalar::add_big(const Scalar& a, const Scalar& b, bool negate_b) {
    std::vector<mpz_class> an, bn;
    mpz_class ad, bd;
    a.big_parts(an, ad);
    b.big_parts(bn, bd);
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), ad.get_mpz_t(), bd.get_mpz_t());
    mpz_class fa = l / ad, fb = l / bd;
    if (negate_b) fb = -fb;
    for (std::size_t i = 0; i < an.size(); ++i) an[i] = an[i] * fa + bn[i] * fb;
    Scalar r;
    r.field_ = a.field_;
    r.set_big(an, l);
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (o.is_zero()) return *this;
    if (big_ || o.big_) return *this = add_big(*this, o, false);
    const std::size_t n = sn_.size();
    if (sd_ == o.sd_) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            sn_[i] += o.sn_[i];
            ok = ok && sn_[i] < kSmallLimit && sn_[i] > -kSmallLimit;
        }
        if (ok && sd_ == 1) return *this;
        std::vector<Wide> w(sn_.begin(), sn_.end());
        set_wide(w, sd_);
        return *this;
    }
    const Wide g = wgcd(sd_, o.sd_);
    const Wide fa = o.sd_ / g, fb = sd_ / g;
    std::vector<Wide> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Wide(sn_[i]) * fa + Wide(o.sn_[i]) * fb;
    set_wide(w, Wide(sd_) * fa);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (o.is_zero()) return *this;
    if (big_ || o.big_) return *this = add_big(*this, o, true);
    return *this += -o;
}

Scalar Scalar::mul_big(const Scalar& a, const Scalar& b) {
    const int n = a.field_->degree();
    std::vector<mpz_class> an, bn;
    mpz_class ad, bd;
    a.big_parts(an, ad);
    b.big_parts(bn, bd);
    std::vector<mpz_class> prod(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (an[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (bn[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
    }
    std::vector<mpz_class> r(n);
    for (int e = 0; e < n; ++e) r[e] = prod[e];
    for (int e = n; e < 2 * n - 1; ++e) {
        if (prod[e] == 0) continue;
        const auto& red = a.field_->reduced_power(e);
        for (int i = 0; i < n; ++i) {
            if (red[i] > 0) mpz_addmul_ui(r[i].get_mpz_t(), prod[e].get_mpz_t(), red[i]);
            else if (red[i] < 0) mpz_submul_ui(r[i].get_mpz_t(), prod[e].get_mpz_t(), -red[i]);
        }
    }
    Scalar out;
    out.field_ = a.field_;
    out.set_big(r, ad * bd);
    return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    const int n = a.field_->degree();
    if (a.is_zero() || b.is_zero()) return Scalar::zero(a.field_);
    if (a.big_ || b.big_) return Scalar::mul_big(a, b);
    if (b.is_rational() && b.sd_ == 1 && b.sn_[0] == 1) return a;
    if (a.is_rational() && a.sd_ == 1 && a.sn_[0] == 1) return b;
    int ia[128], ib[128];
    int na = 0, nb = 0;
    std::int64_t ma = 0, mb = 0;
    for (int i = 0; i < n; ++i) {
        if (a.sn_[i]) {
            ia[na++] = i;
            ma = std::max<std::int64_t>(ma, std::abs(a.sn_[i]));
        }
        if (b.sn_[i]) {
            ib[nb++] = i;
            mb = std::max<std::int64_t>(mb, std::abs(b.sn_[i]));
        }
    }
    const long double bound = static_cast<long double>(ma) * mb * std::min(na, nb) *
                              (1.0L + static_cast<long double>(n) * a.field_->max_reduction_coefficient());
    if (bound > 1e36L || n > 128) return Scalar::mul_big(a, b);
    Wide prod[256] = {};
    for (int x = 0; x < na; ++x) {
        const Wide av = a.sn_[ia[x]];
        for (int y = 0; y < nb; ++y) prod[ia[x] + ib[y]] += av * b.sn_[ib[y]];
    }
    std::vector<Wide> r(prod, prod + n);
    for (int e = n; e < 2 * n - 1; ++e) {
        if (!prod[e]) continue;
        const auto& red = a.field_->reduced_power(e);
        for (int i = 0; i < n; ++i)
            if (red[i]) r[i] += prod[e] * red[i];
    }
    Scalar out;
    out.field_ = a.field_;
    out.set_wide(r, Wide(a.sd_) * b.sd_);
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (big_ != o.big_) return false;
    if (big_) return den_ == o.den_ && num_ == o.num_;
    return sd_ == o.sd_ && sn_ == o.sn_;
}

Scalar Scalar::scaled(const mpq_class& q) const {
    std::vector<mpz_class> n;
    mpz_class d;
    big_parts(n, d);
    for (auto& x : n) x *= q.get_num();
    Scalar r;
    r.field_ = field_;
    r.set_big(n, d * q.get_den());
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    const int n = field_->degree();
    if (is_rational()) {
        mpq_class q = 1 / coeff(0);
        return Scalar(field_, q);
    }
    // Solve (x * z^j columns) c = e_0 over Q.
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
    const Scalar z = root(field_, 1);
    Scalar xj = *this;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[i][j] = xj.coeff(i);
        if (j + 1 < n) xj = xj * z;
    }
    m[0][n] = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        mpq_class inv = 1 / m[c][c];
        for (int j = c; j <= n; ++j) m[c][j] *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            mpq_class f = m[i][c];
            for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    mpz_class l = 1;
    for (int i = 0; i < n; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][n].get_den_mpz_t());
    std::vector<mpz_class> num(n);
    for (int i = 0; i < n; ++i) num[i] = m[i][n].get_num() * (l / m[i][n].get_den());
    Scalar r;
    r.field_ = field_;
    r.set_big(num, l);
    return r;
}

Scalar Scalar::galois(long s) const {
    const long n = field_->order();
    if (std::gcd(((s % n) + n) % n, n) != 1) throw std::invalid_argument("galois exponent not a unit");
    std::vector<mpz_class> src, out(field_->degree());
    mpz_class d;
    big_parts(src, d);
    for (int i = 0; i < field_->degree(); ++i) {
        if (src[i] == 0) continue;
        long e = ((static_cast<long>(i) * s) % n + n) % n;
        const auto& red = field_->reduced_power(static_cast<int>(e));
        for (int j = 0; j < field_->degree(); ++j)
            if (red[j] != 0) out[j] += src[i] * red[j];
    }
    Scalar r;
    r.field_ = field_;
    r.set_big(out, d);
    return r;
}

Scalar Scalar::conj() const { return galois(field_->order() - 1); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(field_, 1L), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::complex<double> Scalar::to_complex() const {
    std::complex<double> acc = 0;
    const double n = field_->order();
    for (int i = 0; i < field_->degree(); ++i) {
        mpq_class c = coeff(i);
        if (c == 0) continue;
        acc += c.get_d() * std::polar(1.0, 2 * M_PI * i / n);
    }
    return acc;
}

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < field_->degree(); ++i) {
        mpq_class c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        mpq_class a = abs(c);
        if (i == 0) os << a.get_str();
        else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << field_->order();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Scalar sqrt_integer(const FieldPtr& field, long n) {
    if (n < 0) throw std::invalid_argument("sqrt_integer expects n >= 0");
    if (n == 0) return Scalar::zero(field);
    long s = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    if (s * s == n) return Scalar(field, s);
    const int m = static_cast<int>(4 * n);
    Scalar g = Scalar::zero(field);
    for (long x = 0; x < m; ++x) g += Scalar::root_of_unity(field, m, (x * x) % m);
    // sum = (1+i) * 2 sqrt(n)
    Scalar one_minus_i = Scalar::one(field) - Scalar::root_of_unity(field, 4, 1);
    return (g * one_minus_i).scaled(mpq_class(1, 4));
}

Scalar Scalar::from_coeffs(FieldPtr field, const std::vector<mpq_class>& c) {
    if (static_cast<int>(c.size()) != field->degree()) throw std::invalid_argument("coefficient count differs from the degree");
    mpz_class den = 1;
    for (const auto& q : c) den = lcm(den, mpz_class(q.get_den()));
    std::vector<mpz_class> num(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) num[i] = c[i].get_num() * (den / c[i].get_den());
    Scalar r;
    r.field_ = std::move(field);
    r.set_big(num, den);
    return r;
}

namespace {

using LD = long double;
using CLD = std::complex<LD>;

// Closest fraction with denominator at most max_den, if within tol.
std::optional<mpq_class> recognize(LD v, long max_den, LD tol) {
    LD x = v;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        LD a = std::floor(x);
        if (std::fabs(a) > 9e15L) break;
        const long ai = static_cast<long>(a);
        const long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        if (std::fabs(v - static_cast<LD>(p2) / static_cast<LD>(q2)) <= tol) return mpq_class(p2, q2);
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const LD frac = x - a;
        if (frac < 1e-30L) break;
        x = 1 / frac;
    }
    return std::nullopt;
}

// Solve V c = b for the embedding matrix V[t][j] = exp(2 pi i u_t j / N).
std::vector<std::vector<CLD>> embedding_inverse(int order, const std::vector<int>& units, int n) {
    const LD tau = 2 * std::acos(static_cast<LD>(-1));
    std::vector<std::vector<CLD>> a(n, std::vector<CLD>(2 * n));
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j) a[r][j] = std::polar<LD>(1, tau * static_cast<LD>((static_cast<long>(units[r]) * j) % order) / order);
        a[r][n + r] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        std::swap(a[c], a[piv]);
        const CLD d = a[c][c];
        for (auto& x : a[c]) x /= d;
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == CLD(0)) continue;
            const CLD f = a[r][c];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<CLD>> inv(n, std::vector<CLD>(n));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) inv[r][j] = a[r][n + j];
    return inv;
}

}  // namespace

std::optional<Scalar> square_root(const Scalar& x) {
    const FieldPtr& field = x.field();
    if (x.is_zero()) return x;
    if (x.is_rational()) {
        const mpq_class q = x.rational();
        if (q > 0) {
            mpz_class a = q.get_num(), b = q.get_den(), ra, rb;
            if (mpz_perfect_square_p(a.get_mpz_t()) && mpz_perfect_square_p(b.get_mpz_t())) {
                mpz_sqrt(ra.get_mpz_t(), a.get_mpz_t());
                mpz_sqrt(rb.get_mpz_t(), b.get_mpz_t());
                return Scalar(field, mpq_class(ra, rb));
            }
        }
    }
    const int order = field->order(), n = field->degree();
    std::vector<int> units;
    for (int t = 1; t < order; ++t)
        if (std::gcd(t, order) == 1) units.push_back(t);
    // Embeddings come in conjugate pairs t, N - t; one free sign per pair.
    std::vector<int> rep, partner(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
        const int t = units[i];
        partner[i] = static_cast<int>(std::find(units.begin(), units.end(), order - t) - units.begin());
        if (2 * t < order) rep.push_back(static_cast<int>(i));
    }
    if (rep.size() > 20) return std::nullopt;
    const auto vinv = embedding_inverse(order, units, n);
    const auto c = x.coeffs();
    const LD tau = 2 * std::acos(static_cast<LD>(-1));
    std::vector<CLD> root(n);
    for (int r = 0; r < n; ++r) {
        CLD v = 0;
        for (int j = 0; j < n; ++j)
            v += static_cast<LD>(c[j].get_d()) *
                 std::polar<LD>(1, tau * static_cast<LD>((static_cast<long>(units[r]) * j) % order) / order);
        root[r] = std::sqrt(v);
    }
    for (int i : rep) root[partner[i]] = std::conj(root[i]);
    // Coefficients as a signed sum of columns; Gray code flips one pair at a time.
    std::vector<CLD> coef(n, 0);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) coef[j] += vinv[j][r] * root[r];
    const long combos = 1L << (rep.size() - 1);
    for (long step = 0; step < combos; ++step) {
        if (step > 0) {
            const int bit = __builtin_ctzl(static_cast<unsigned long>(step)) + 1;
            const int i = rep[bit], pi = partner[i];
            for (int j = 0; j < n; ++j) coef[j] -= LD(2) * (vinv[j][i] * root[i] + vinv[j][pi] * root[pi]);
            root[i] = -root[i];
            root[pi] = -root[pi];
        }
        std::vector<mpq_class> q(n);
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            auto r = recognize(coef[j].real(), 1000000, 1e-9L * std::max<LD>(1, std::fabs(coef[j].real())));
            if (!r || std::fabs(coef[j].imag()) > 1e-7L) ok = false;
            else q[j] = *r;
        }
        if (!ok) continue;
        Scalar y = Scalar::from_coeffs(field, q);
        if (y * y == x) return y;
    }
    return std::nullopt;
}

}  // namespace qrep
