#include "gtop/group.hpp"

#include <cmath>
#include <numeric>

#include "gtop/config.hpp"

namespace gtop::group {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) throw ValidationError("group needs at least one cyclic factor");
    order_ = 1;
    for (int q : orders_) {
        if (q < 2) throw ValidationError("cyclic order must be >= 2");
        order_ *= q;
    }
    strides_.resize(orders_.size());
    long long s = 1;
    for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
        strides_[i] = s;
        s *= orders_[i];
    }
    pair_den_ = 1;
    for (int q : orders_) pair_den_ = std::lcm(pair_den_, static_cast<long long>(q));

    // Quarter-turn roots exact, conjugate symmetry for the rest.
    roots_.resize(pair_den_);
    roots_[0] = cplx(1.0, 0.0);
    const long double two_pi = 6.283185307179586476925286766559L;
    for (long long k = 1; k < pair_den_; ++k) {
        if (2 * k == pair_den_) {
            roots_[k] = cplx(-1.0, 0.0);
        } else if (4 * k == pair_den_) {
            roots_[k] = cplx(0.0, 1.0);
        } else if (4 * k == 3 * pair_den_) {
            roots_[k] = cplx(0.0, -1.0);
        } else if (2 * k < pair_den_) {
            long double th = two_pi * static_cast<long double>(k) / static_cast<long double>(pair_den_);
            roots_[k] = cplx(static_cast<double>(cosl(th)), static_cast<double>(sinl(th)));
        } else {
            roots_[k] = std::conj(roots_[pair_den_ - k]);
        }
    }
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec) {
    std::vector<int> orders;
    size_t pos = 0;
    while (pos < spec.size()) {
        if (spec[pos] != 'Z' && spec[pos] != 'z')
            throw ValidationError("bad group spec '" + spec + "': expected 'Z<q>' factors joined by 'x'");
        ++pos;
        size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos) throw ValidationError("bad group spec '" + spec + "': missing order after Z");
        orders.push_back(std::stoi(spec.substr(start, pos - start)));
        if (pos < spec.size()) {
            if (spec[pos] != 'x' && spec[pos] != 'X')
                throw ValidationError("bad group spec '" + spec + "': expected 'x' between factors");
            ++pos;
            if (pos == spec.size()) throw ValidationError("bad group spec '" + spec + "': trailing 'x'");
        }
    }
    return FiniteAbelianGroup(orders);
}

std::string FiniteAbelianGroup::spec_string() const {
    std::string s;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(orders_[i]);
    }
    return s;
}

int FiniteAbelianGroup::add(int a, int b) const {
    int out = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        int ra = static_cast<int>((a / strides_[i]) % orders_[i]);
        int rb = static_cast<int>((b / strides_[i]) % orders_[i]);
        int rc = ra + rb;
        if (rc >= orders_[i]) rc -= orders_[i];
        out += static_cast<int>(rc * strides_[i]);
    }
    return out;
}

int FiniteAbelianGroup::neg(int a) const {
    int out = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        int ra = static_cast<int>((a / strides_[i]) % orders_[i]);
        int rc = ra == 0 ? 0 : orders_[i] - ra;
        out += static_cast<int>(rc * strides_[i]);
    }
    return out;
}

std::vector<int> FiniteAbelianGroup::residues(int a) const {
    std::vector<int> r(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i)
        r[i] = static_cast<int>((a / strides_[i]) % orders_[i]);
    return r;
}

int FiniteAbelianGroup::from_residues(const std::vector<int>& r) const {
    if (r.size() != orders_.size()) throw ValidationError("element shape mismatch");
    int out = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (r[i] < 0 || r[i] >= orders_[i]) throw ValidationError("residue out of range");
        out += static_cast<int>(r[i] * strides_[i]);
    }
    return out;
}

Rational FiniteAbelianGroup::pairing(int a_hat, int a) const {
    long long num = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long rh = (a_hat / strides_[i]) % orders_[i];
        long long ra = (a / strides_[i]) % orders_[i];
        num += (rh * ra % orders_[i]) * (pair_den_ / orders_[i]);
    }
    return Rational(num % pair_den_, pair_den_).mod1();
}

cplx FiniteAbelianGroup::character(int a_hat, int a) const {
    Rational p = pairing(a_hat, a);
    // p = k/den with den dividing pair_den_
    long long k = p.num() * (pair_den_ / p.den());
    return roots_[k];
}

Rational pairing(const FiniteAbelianGroup& g, const GroupElement& a_hat, const GroupElement& a) {
    return g.pairing(g.from_residues(a_hat.residues), g.from_residues(a.residues));
}

GroupFunction::GroupFunction(FiniteAbelianGroup domain, std::vector<cplx> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (static_cast<long long>(values_.size()) != domain_.order())
        throw ValidationError("group function needs exactly one value per element");
}

GroupFunction GroupFunction::constant(const FiniteAbelianGroup& g, cplx v) {
    return GroupFunction(g, std::vector<cplx>(g.order(), v));
}

GroupFunction GroupFunction::delta_at_zero(const FiniteAbelianGroup& g) {
    std::vector<cplx> v(g.order(), cplx(0.0, 0.0));
    v[0] = cplx(1.0, 0.0);
    return GroupFunction(g, std::move(v));
}

GroupFunction fourier_transform(const GroupFunction& f) {
    const auto& g = f.domain();
    long long n = g.order();
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (long long ah = 0; ah < n; ++ah) {
        cplx acc(0.0, 0.0);
        for (long long a = 0; a < n; ++a)
            acc += f(static_cast<int>(a)) * g.character(static_cast<int>(ah), static_cast<int>(a));
        out[ah] = acc;
    }
    return GroupFunction(g, std::move(out));
}

GroupFunction inverse_fourier_transform(const GroupFunction& g_hat) {
    const auto& g = g_hat.domain();
    long long n = g.order();
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (long long a = 0; a < n; ++a) {
        cplx acc(0.0, 0.0);
        for (long long ah = 0; ah < n; ++ah)
            acc += g_hat(static_cast<int>(ah)) *
                   std::conj(g.character(static_cast<int>(ah), static_cast<int>(a)));
        out[a] = acc / static_cast<double>(n);
    }
    return GroupFunction(g, std::move(out));
}

FiniteAbelianGroup product_group(const std::vector<FiniteAbelianGroup>& parts) {
    std::vector<int> orders;
    for (const auto& p : parts)
        orders.insert(orders.end(), p.cyclic_orders().begin(), p.cyclic_orders().end());
    return FiniteAbelianGroup(orders);
}

}  // namespace gtop::group
