#include "bruhat/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace bruhat {

namespace {

using Poly = std::vector<unsigned>; // dense, low degree first, may have zero tail

int degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += p;
    return static_cast<unsigned>(t);
}

// a mod b, b monic-normalizable, over F_p
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
    int db = degree(b);
    unsigned lead_inv = inv_mod_p(b[db], p);
    int da = degree(a);
    while (da >= db) {
        unsigned f = (a[da] * lead_inv) % p;
        for (int i = 0; i <= db; ++i) {
            unsigned sub = (f * b[i]) % p;
            a[da - db + i] = (a[da - db + i] + p - sub) % p;
        }
        da = degree(a);
    }
    a.resize(db > 0 ? db : 1, 0);
    return a;
}

// extended gcd over F_p[x]: returns g and s with s*a = g mod b
std::pair<Poly, Poly> poly_egcd(Poly a, Poly b, unsigned p) {
    Poly s0{1}, s1{0};
    while (degree(b) >= 0) {
        // a = q*b + r
        Poly r = a;
        Poly q(std::max<size_t>(a.size(), 1), 0);
        int db = degree(b);
        unsigned lead_inv = inv_mod_p(b[db], p);
        int dr = degree(r);
        while (dr >= db) {
            unsigned f = (r[dr] * lead_inv) % p;
            q[dr - db] = f;
            for (int i = 0; i <= db; ++i) {
                unsigned sub = (f * b[i]) % p;
                r[dr - db + i] = (r[dr - db + i] + p - sub) % p;
            }
            dr = degree(r);
        }
        // (s0,s1) <- (s1, s0 - q*s1)
        Poly qs = poly_mul(q, s1, p);
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s2.size(); ++i) {
            unsigned x = i < s0.size() ? s0[i] : 0;
            unsigned y = i < qs.size() ? qs[i] : 0;
            s2[i] = (x + p - y % p) % p;
        }
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
    }
    return {a, s0};
}

bool is_irreducible(const Poly& f, unsigned p) {
    int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    // trial division by all monic polynomials of degree <= d/2
    for (int e = 1; e <= d / 2; ++e) {
        unsigned long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (unsigned long code = 0; code < count; ++code) {
            Poly g(e + 1, 0);
            g[e] = 1;
            unsigned long c = code;
            for (int i = 0; i < e; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            Poly r = poly_mod(f, g, p);
            if (degree(r) < 0) return false;
        }
    }
    return true;
}

} // namespace

FiniteField::FiniteField(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), mod_(std::move(modulus)) {
    order_ = 1;
    for (unsigned i = 0; i < m_; ++i) order_ *= p_;
}

std::shared_ptr<FiniteField> FiniteField::create(unsigned p, unsigned m,
                                                 std::vector<unsigned> modulus) {
    if (p < 2 || m < 1) throw error("FiniteField: need p >= 2, m >= 1");
    if (modulus.empty()) {
        if (m == 1) {
            modulus = {0, 1}; // x
        } else {
            // smallest monic irreducible of degree m
            unsigned long count = 1;
            for (unsigned i = 0; i < m; ++i) count *= p;
            for (unsigned long code = 0; code < count; ++code) {
                Poly f(m + 1, 0);
                f[m] = 1;
                unsigned long c = code;
                for (unsigned i = 0; i < m; ++i) {
                    f[i] = static_cast<unsigned>(c % p);
                    c /= p;
                }
                if (is_irreducible(f, p)) {
                    modulus = f;
                    break;
                }
            }
        }
    }
    if (modulus.size() != m + 1 || modulus[m] % p != 1)
        throw error("FiniteField: modulus must be monic of degree m");
    for (auto& c : modulus) c %= p;
    if (m > 1 && !is_irreducible(modulus, p))
        throw error("FiniteField: modulus is reducible");
    return std::shared_ptr<FiniteField>(new FiniteField(p, m, std::move(modulus)));
}

KKElem FiniteField::zero() const {
    return KKElem(shared_from_this(), std::vector<unsigned>(m_, 0));
}

KKElem FiniteField::one() const { return from_int(1); }

KKElem FiniteField::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    std::vector<unsigned> c(m_, 0);
    c[0] = static_cast<unsigned>(r);
    return KKElem(shared_from_this(), std::move(c));
}

KKElem FiniteField::element(std::vector<unsigned> coeffs) const {
    coeffs.resize(m_, 0);
    for (auto& c : coeffs) c %= p_;
    return KKElem(shared_from_this(), std::move(coeffs));
}

KKElem FiniteField::parse(const std::string& s) const {
    if (s.empty()) throw parse_error("KKElem: empty string");
    if (s.front() == '[') {
        std::vector<unsigned> c;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) c.push_back(std::stoul(tok));
        return element(std::move(c));
    }
    return from_int(std::stol(s));
}

bool KKElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](unsigned x) { return x == 0; });
}

KKElem KKElem::operator+(const KKElem& rhs) const {
    unsigned p = F_->p_;
    std::vector<unsigned> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + rhs.c_[i]) % p;
    return KKElem(F_, std::move(r));
}

KKElem KKElem::neg() const {
    unsigned p = F_->p_;
    std::vector<unsigned> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (p - c_[i]) % p;
    return KKElem(F_, std::move(r));
}

KKElem KKElem::operator-(const KKElem& rhs) const { return *this + rhs.neg(); }

KKElem KKElem::operator*(const KKElem& rhs) const {
    unsigned p = F_->p_;
    Poly prod = poly_mul(c_, rhs.c_, p);
    if (prod.empty()) prod = {0};
    Poly red = poly_mod(std::move(prod), F_->mod_, p);
    red.resize(F_->m_, 0);
    return KKElem(F_, std::move(red));
}

KKElem KKElem::inv() const {
    if (is_zero()) throw division_by_zero("KKElem::inv of zero");
    unsigned p = F_->p_;
    auto [g, s] = poly_egcd(c_, F_->mod_, p);
    // g is a nonzero constant; scale s by its inverse
    unsigned ginv = inv_mod_p(g[0], p);
    Poly r = poly_mod(s, F_->mod_, p);
    for (auto& x : r) x = (x * ginv) % p;
    r.resize(F_->m_, 0);
    return KKElem(F_, std::move(r));
}

KKElem KKElem::pow(long e) const {
    KKElem base = *this;
    if (e < 0) {
        base = inv();
        e = -e;
    }
    KKElem acc = F_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool KKElem::operator==(const KKElem& rhs) const { return c_ == rhs.c_; }

std::string KKElem::str() const {
    if (F_->m_ == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

KKElem unit_residue(const PAdic& a, const std::shared_ptr<FiniteField>& F) {
    if (a.is_zero()) throw zero_argument("unit_residue of zero");
    return F->from_int(static_cast<long>(a.leading_digit()));
}

} // namespace bruhat
