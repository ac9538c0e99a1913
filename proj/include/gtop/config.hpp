#ifndef GTOP_CONFIG_HPP
#define GTOP_CONFIG_HPP

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtop {

/// Input or structural invariant violated; messages name the violated rule.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct RunConfig {
    long long enumeration_cap = 1LL << 20;
    double tolerance = 1e-9;
    unsigned long long seed = 12345;
    std::optional<std::vector<std::string>> tree_override;
    std::string output_format = "json";  // "json" | "csv"

    void validate() const {
        if (enumeration_cap < 1) throw ValidationError("enumeration cap must be >= 1");
        if (!(tolerance > 0)) throw ValidationError("tolerance must be > 0");
    }
};

/// Relative comparison above magnitude 1, absolute below.
inline bool approx_equal(double a, double b, double tol = 1e-9) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

inline bool approx_equal(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

}  // namespace gtop

#endif
