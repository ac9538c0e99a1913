#ifndef GTOP_GROUP_HPP
#define GTOP_GROUP_HPP

#include <complex>
#include <string>
#include <vector>

#include "gtop/rational.hpp"

namespace gtop::group {

using cplx = std::complex<double>;

/// A finite abelian group Z_q1 x Z_q2 x ... x Z_qm.
///
/// Elements are addressed by their index in the canonical mixed-radix order
/// (first component most significant), so index 0 is the identity and
/// ascending indices enumerate the group deterministically.  The dual group
/// has the same cyclic orders; dual elements use the same indexing.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{2}) {}  // defaults to Z2

    /// Parse a spec string such as "Z2", "Z3" or "Z2xZ4".
    static FiniteAbelianGroup parse(const std::string& spec);
    std::string spec_string() const;

    const std::vector<int>& cyclic_orders() const { return orders_; }
    long long order() const { return order_; }
    int rank() const { return static_cast<int>(orders_.size()); }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }

    std::vector<int> residues(int a) const;
    int from_residues(const std::vector<int>& r) const;

    /// Pairing <a_hat, a> = sum_i a_hat_i * a_i / q_i  (mod 1), exact.
    Rational pairing(int a_hat, int a) const;

    /// e^{2*pi*i*<a_hat, a>}.  Quarter-turn phases are exact; the root table
    /// is conjugate-symmetric so opposite characters cancel exactly.
    cplx character(int a_hat, int a) const;

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<int> orders_;
    std::vector<long long> strides_;
    long long order_;
    long long pair_den_;              // lcm of the cyclic orders
    std::vector<cplx> roots_;         // pair_den_-th roots of unity
};

/// Element as a residue tuple, r[i] in [0, q_i).
struct GroupElement {
    std::vector<int> residues;
};

Rational pairing(const FiniteAbelianGroup& g, const GroupElement& a_hat, const GroupElement& a);

/// Complex-valued function on a group, values in canonical element order.
class GroupFunction {
public:
    GroupFunction(FiniteAbelianGroup domain, std::vector<cplx> values);
    static GroupFunction constant(const FiniteAbelianGroup& g, cplx v);
    static GroupFunction delta_at_zero(const FiniteAbelianGroup& g);

    const FiniteAbelianGroup& domain() const { return domain_; }
    const std::vector<cplx>& values() const { return values_; }
    cplx operator()(int a) const { return values_[a]; }

private:
    FiniteAbelianGroup domain_;
    std::vector<cplx> values_;
};

/// f_hat(a_hat) = sum_a f(a) e^{2 pi i <a_hat, a>}.
GroupFunction fourier_transform(const GroupFunction& f);

/// g(a) = |A|^{-1} sum_{a_hat} g_hat(a_hat) e^{-2 pi i <a_hat, a>}.
GroupFunction inverse_fourier_transform(const GroupFunction& g_hat);

/// Concatenation Z_... x Z_... of several groups (product group).
FiniteAbelianGroup product_group(const std::vector<FiniteAbelianGroup>& parts);

namespace detail {
/// Advance a mixed-radix counter; returns false after wrapping to all-zero.
inline bool next_tuple(std::vector<int>& digits, const std::vector<int>& radix) {
    for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
        if (++digits[i] < radix[i]) return true;
        digits[i] = 0;
    }
    return false;
}
}  // namespace detail

}  // namespace gtop::group

#endif
