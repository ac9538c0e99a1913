#include "gtop/gcode.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gtop/config.hpp"

namespace gtop::gcode {

using group::FiniteAbelianGroup;

GroupCode::GroupCode(FiniteAbelianGroup alphabet, std::vector<std::string> labels,
                     std::vector<Codeword> generators)
    : alphabet_(std::move(alphabet)),
      length_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      generators_(std::move(generators)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != length_)
        throw ValidationError("coordinate labels must be distinct");
    for (const auto& g : generators_)
        if (static_cast<int>(g.size()) != length_)
            throw ValidationError("generator length mismatch");
}

static std::vector<std::string> index_labels(int n) {
    std::vector<std::string> l(n);
    for (int i = 0; i < n; ++i) l[i] = std::to_string(i);
    return l;
}

/// One generator per cyclic factor: the element with residue 1 in that factor.
static std::vector<int> cyclic_generators(const FiniteAbelianGroup& a) {
    std::vector<int> gens;
    for (int i = 0; i < a.rank(); ++i) {
        std::vector<int> r(a.rank(), 0);
        r[i] = 1;
        gens.push_back(a.from_residues(r));
    }
    return gens;
}

GroupCode GroupCode::repetition(const FiniteAbelianGroup& a, int n) {
    if (n < 1) throw ValidationError("repetition code needs n >= 1");
    std::vector<Codeword> gens;
    for (int g : cyclic_generators(a)) gens.push_back(Codeword(n, g));
    return GroupCode(a, index_labels(n), std::move(gens));
}

GroupCode GroupCode::zero_sum(const FiniteAbelianGroup& a, int n) {
    if (n < 1) throw ValidationError("zero-sum code needs n >= 1");
    std::vector<Codeword> gens;
    for (int i = 0; i + 1 < n; ++i) {
        for (int g : cyclic_generators(a)) {
            Codeword w(n, 0);
            w[i] = g;
            w[n - 1] = a.neg(g);
            gens.push_back(std::move(w));
        }
    }
    return GroupCode(a, index_labels(n), std::move(gens));
}

GroupCode GroupCode::universe(const FiniteAbelianGroup& a, int n) {
    if (n < 1) throw ValidationError("universe code needs n >= 1");
    std::vector<Codeword> gens;
    for (int i = 0; i < n; ++i) {
        for (int g : cyclic_generators(a)) {
            Codeword w(n, 0);
            w[i] = g;
            gens.push_back(std::move(w));
        }
    }
    return GroupCode(a, index_labels(n), std::move(gens));
}

GroupCode GroupCode::trivial(const FiniteAbelianGroup& a, int n) {
    if (n < 1) throw ValidationError("trivial code needs n >= 1");
    return GroupCode(a, index_labels(n), {});
}

GroupCode GroupCode::from_words(const FiniteAbelianGroup& a, std::vector<std::string> labels,
                                std::vector<Codeword> words) {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    int n = static_cast<int>(labels.size());
    std::set<Codeword> span;
    span.insert(Codeword(n, 0));
    std::vector<Codeword> gens;
    auto add = [&](const Codeword& x, const Codeword& y) {
        Codeword c(n);
        for (int i = 0; i < n; ++i) c[i] = a.add(x[i], y[i]);
        return c;
    };
    for (const auto& w : words) {
        if (span.count(w)) continue;
        gens.push_back(w);
        std::vector<Codeword> current(span.begin(), span.end());
        Codeword step(n, 0);
        for (;;) {
            step = add(step, w);
            if (step == Codeword(n, 0)) break;
            for (const auto& s : current) span.insert(add(s, step));
        }
    }
    if (span.size() != words.size())
        throw ValidationError("word list is not closed under addition");
    GroupCode c(a, std::move(labels), std::move(gens));
    c.elements_ = std::move(words);
    return c;
}

Codeword GroupCode::add_words(const Codeword& a, const Codeword& b) const {
    Codeword c(length_);
    for (int i = 0; i < length_; ++i) c[i] = alphabet_.add(a[i], b[i]);
    return c;
}

const std::vector<Codeword>& GroupCode::elements(long long cap) const {
    if (elements_) return *elements_;
    // Closure under the cyclic span of each generator in turn; since the
    // group is abelian this reaches exactly the generated subgroup.
    std::set<Codeword> s;
    s.insert(Codeword(length_, 0));
    for (const auto& g : generators_) {
        std::vector<Codeword> current(s.begin(), s.end());
        Codeword step(length_, 0);
        for (;;) {
            step = add_words(step, g);
            if (step == Codeword(length_, 0)) break;
            for (const auto& w : current) {
                s.insert(add_words(w, step));
                if (static_cast<long long>(s.size()) > cap)
                    throw CapExceeded("code enumeration exceeds cap");
            }
        }
    }
    elements_ = std::vector<Codeword>(s.begin(), s.end());
    return *elements_;
}

long long GroupCode::size(long long cap) const { return static_cast<long long>(elements(cap).size()); }

bool GroupCode::contains(const Codeword& w, long long cap) const {
    const auto& e = elements(cap);
    return std::binary_search(e.begin(), e.end(), w);
}

std::optional<int> GroupCode::dimension(long long cap) const {
    long long sz = size(cap);
    long long q = alphabet_.order();
    int k = 0;
    long long p = 1;
    while (p < sz) { p *= q; ++k; }
    if (p == sz) return k;
    return std::nullopt;
}

GroupCode GroupCode::dual(long long cap) const {
    // a_hat is orthogonal to C iff it is orthogonal to every generator.
    long long total = 1;
    for (int i = 0; i < length_; ++i) {
        total *= alphabet_.order();
        if (total > cap) throw CapExceeded("dual code enumeration exceeds cap");
    }
    std::vector<Codeword> words;
    Codeword w(length_, 0);
    std::vector<int> radix(length_, static_cast<int>(alphabet_.order()));
    do {
        bool ok = true;
        for (const auto& g : generators_) {
            Rational acc(0);
            for (int i = 0; i < length_; ++i) acc = acc + alphabet_.pairing(w[i], g[i]);
            if (!acc.mod1().is_zero()) { ok = false; break; }
        }
        if (ok) words.push_back(w);
    } while (group::detail::next_tuple(w, radix));
    return from_words(alphabet_, labels_, std::move(words));
}

std::vector<int> GroupCode::label_indices(const std::vector<std::string>& j) const {
    std::vector<int> idx;
    for (const auto& l : j) {
        auto it = std::find(labels_.begin(), labels_.end(), l);
        if (it == labels_.end()) throw ValidationError("unknown coordinate label '" + l + "'");
        idx.push_back(static_cast<int>(it - labels_.begin()));
    }
    std::set<int> seen(idx.begin(), idx.end());
    if (seen.size() != idx.size()) throw ValidationError("duplicate coordinate label");
    return idx;
}

bool GroupCode::is_information_set(const std::vector<std::string>& j, long long cap) const {
    auto idx = label_indices(j);
    long long full = 1;
    for (size_t i = 0; i < idx.size(); ++i) full *= alphabet_.order();
    if (size(cap) != full) return false;
    std::set<Codeword> proj;
    for (const auto& c : elements(cap)) {
        Codeword p(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) p[i] = c[idx[i]];
        proj.insert(std::move(p));
    }
    return static_cast<long long>(proj.size()) == full;
}

IoMap GroupCode::io_map(const std::vector<std::string>& j, long long cap) const {
    if (!dimension(cap))
        throw ValidationError("information-set query requires |C| to be a power of |A|");
    if (!is_information_set(j, cap))
        throw ValidationError("label set is not an information set");
    auto idx = label_indices(j);
    std::vector<int> check_idx;
    for (int i = 0; i < length_; ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) check_idx.push_back(i);

    IoMap m;
    m.alphabet = alphabet_;
    for (int i : idx) m.info_labels.push_back(labels_[i]);
    for (int i : check_idx) m.check_labels.push_back(labels_[i]);
    m.check_table.assign(size(cap), Codeword());
    long long q = alphabet_.order();
    for (const auto& c : elements(cap)) {
        long long key = 0;
        for (int i : idx) key = key * q + c[i];
        Codeword chk;
        for (int i : check_idx) chk.push_back(c[i]);
        m.check_table[key] = std::move(chk);
    }
    return m;
}

Codeword IoMap::check_of(const Codeword& info_word) const {
    long long q = alphabet.order();
    long long key = 0;
    for (int v : info_word) key = key * q + v;
    return check_table[key];
}

GroupCode IoMap::to_code() const {
    std::vector<std::string> labels = info_labels;
    labels.insert(labels.end(), check_labels.begin(), check_labels.end());
    std::vector<Codeword> words;
    std::vector<int> radix(info_labels.size(), static_cast<int>(alphabet.order()));
    Codeword info(info_labels.size(), 0);
    do {
        Codeword w = info;
        Codeword chk = check_of(info);
        w.insert(w.end(), chk.begin(), chk.end());
        words.push_back(std::move(w));
    } while (group::detail::next_tuple(info, radix));
    return GroupCode(alphabet, labels, words);
}

std::vector<GroupCode> GroupCode::systematic_basis(const std::vector<std::string>& j,
                                                   long long cap) const {
    if (!is_information_set(j, cap))
        throw ValidationError("label set is not an information set");
    auto idx = label_indices(j);
    std::vector<GroupCode> basis;
    for (size_t k = 0; k < idx.size(); ++k) {
        std::vector<Codeword> words;
        for (const auto& c : elements(cap)) {
            bool zero_elsewhere = true;
            for (size_t t = 0; t < idx.size(); ++t)
                if (t != k && c[idx[t]] != 0) { zero_elsewhere = false; break; }
            if (zero_elsewhere) words.push_back(c);
        }
        basis.push_back(from_words(alphabet_, labels_, std::move(words)));
    }
    return basis;
}

GroupCode GroupCode::project(const std::vector<std::string>& j) const {
    auto idx = label_indices(j);
    std::vector<std::string> labels;
    for (int i : idx) labels.push_back(labels_[i]);
    std::vector<Codeword> gens;
    for (const auto& g : generators_) {
        Codeword p(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) p[i] = g[idx[i]];
        gens.push_back(std::move(p));
    }
    return GroupCode(alphabet_, labels, gens);
}

GroupCode GroupCode::cross_section(const std::vector<std::string>& j, long long cap) const {
    auto idx = label_indices(j);
    std::vector<std::string> labels;
    for (int i : idx) labels.push_back(labels_[i]);
    std::set<int> keep(idx.begin(), idx.end());
    std::vector<Codeword> words;
    for (const auto& c : elements(cap)) {
        bool zero_outside = true;
        for (int i = 0; i < length_; ++i)
            if (!keep.count(i) && c[i] != 0) { zero_outside = false; break; }
        if (!zero_outside) continue;
        Codeword p(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) p[i] = c[idx[i]];
        words.push_back(std::move(p));
    }
    return from_words(alphabet_, labels, std::move(words));
}

std::vector<std::string> GroupCode::support(long long cap) const {
    std::vector<std::string> out;
    for (int i = 0; i < length_; ++i) {
        for (const auto& c : elements(cap)) {
            if (c[i] != 0) { out.push_back(labels_[i]); break; }
        }
    }
    return out;
}

bool GroupCode::same_code(const GroupCode& other, long long cap) const {
    if (alphabet_ != other.alphabet_ || length_ != other.length_) return false;
    auto sorted = [](std::vector<std::string> v) { std::sort(v.begin(), v.end()); return v; };
    if (sorted(labels_) != sorted(other.labels_)) return false;
    // Align columns of `other` to this code's label order.
    std::vector<int> perm = other.label_indices(labels_);
    std::set<Codeword> a(elements(cap).begin(), elements(cap).end());
    std::set<Codeword> b;
    for (const auto& c : other.elements(cap)) {
        Codeword w(length_);
        for (int i = 0; i < length_; ++i) w[i] = c[perm[i]];
        b.insert(std::move(w));
    }
    return a == b;
}

std::string GroupCode::to_text() const {
    std::ostringstream os;
    os << alphabet_.spec_string() << "\n";
    os << "labels";
    for (const auto& l : labels_) os << " " << l;
    os << "\n";
    for (const auto& g : generators_) {
        for (int i = 0; i < length_; ++i) {
            if (i) os << " ";
            auto r = alphabet_.residues(g[i]);
            for (size_t k = 0; k < r.size(); ++k) {
                if (k) os << ",";
                os << r[k];
            }
        }
        os << "\n";
    }
    return os.str();
}

GroupCode GroupCode::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw ValidationError("empty code text");
    auto alphabet = FiniteAbelianGroup::parse(line);
    if (!std::getline(is, line)) throw ValidationError("missing label line");
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok != "labels") throw ValidationError("expected 'labels' line");
    std::vector<std::string> labels;
    while (ls >> tok) labels.push_back(tok);
    std::vector<Codeword> gens;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream gs(line);
        Codeword w;
        while (gs >> tok) {
            std::vector<int> res;
            std::istringstream es(tok);
            std::string d;
            while (std::getline(es, d, ',')) res.push_back(std::stoi(d));
            w.push_back(alphabet.from_residues(res));
        }
        if (w.size() != labels.size()) throw ValidationError("generator length mismatch");
        gens.push_back(std::move(w));
    }
    return GroupCode(alphabet, labels, gens);
}

}  // namespace gtop::gcode
