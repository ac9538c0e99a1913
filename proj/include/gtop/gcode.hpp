#ifndef GTOP_GCODE_HPP
#define GTOP_GCODE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtop/group.hpp"

namespace gtop::gcode {

/// Codeword over A^n: one element index per coordinate.
using Codeword = std::vector<int>;

class GroupCode;

/// Homomorphism A^J -> A^Jbar that completes an information-set word to a
/// full codeword.  Stored as a dense table indexed by the mixed-radix index
/// of the information word in canonical order.
struct IoMap {
    group::FiniteAbelianGroup alphabet;
    std::vector<std::string> info_labels;
    std::vector<std::string> check_labels;
    std::vector<Codeword> check_table;  // info word index -> check coordinates

    Codeword check_of(const Codeword& info_word) const;
    /// Rebuild the full code (info coords first, then check coords).
    GroupCode to_code() const;
};

/// A subgroup of A^n given by generators, with opaque coordinate labels.
/// Membership and size are by explicit enumeration under a hard cap.
class GroupCode {
public:
    GroupCode(group::FiniteAbelianGroup alphabet, std::vector<std::string> labels,
              std::vector<Codeword> generators);

    static GroupCode repetition(const group::FiniteAbelianGroup& a, int n);
    static GroupCode zero_sum(const group::FiniteAbelianGroup& a, int n);
    static GroupCode universe(const group::FiniteAbelianGroup& a, int n);
    /// Subgroup {0}^n.
    static GroupCode trivial(const group::FiniteAbelianGroup& a, int n);

    /// Build from a complete (closed) word list, keeping only a reduced
    /// generating subset; the word list itself is cached as the elements.
    static GroupCode from_words(const group::FiniteAbelianGroup& a,
                                std::vector<std::string> labels, std::vector<Codeword> words);

    const group::FiniteAbelianGroup& alphabet() const { return alphabet_; }
    int length() const { return length_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Codeword>& generators() const { return generators_; }

    /// Sorted list of all codewords (cached after first call).
    const std::vector<Codeword>& elements(long long cap) const;
    long long size(long long cap) const;
    bool contains(const Codeword& w, long long cap) const;

    /// k such that |C| = |A|^k, if the size is such a power.
    std::optional<int> dimension(long long cap) const;

    /// {a_hat : <a_hat, c> = 0 for all c in C}, with |C| * |C_perp| = |A|^n.
    GroupCode dual(long long cap) const;

    bool is_information_set(const std::vector<std::string>& j, long long cap) const;
    IoMap io_map(const std::vector<std::string>& j, long long cap) const;
    std::vector<GroupCode> systematic_basis(const std::vector<std::string>& j, long long cap) const;

    GroupCode project(const std::vector<std::string>& j) const;
    GroupCode cross_section(const std::vector<std::string>& j, long long cap) const;

    /// Coordinates where some codeword is nonzero.
    std::vector<std::string> support(long long cap) const;

    /// Set equality, matching coordinates by label.
    bool same_code(const GroupCode& other, long long cap) const;

    std::string to_text() const;
    static GroupCode from_text(const std::string& text);

    std::vector<int> label_indices(const std::vector<std::string>& j) const;

private:
    group::FiniteAbelianGroup alphabet_;
    int length_;
    std::vector<std::string> labels_;
    std::vector<Codeword> generators_;
    mutable std::optional<std::vector<Codeword>> elements_;

    Codeword add_words(const Codeword& a, const Codeword& b) const;
};

}  // namespace gtop::gcode

#endif
