#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loopsplit {

/**** Graded F2 vector spaces ****/

// Finitely supported degree -> dimension table, Z-graded (negative degrees
// allowed). Degrees with dimension zero are absent. A degree may optionally
// carry basis labels; labels are kept only while they account for the full
// dimension at that degree.
class GradedF2Module {
public:
    GradedF2Module() = default;

    static GradedF2Module from_dims(const std::map<int, long long>& dims) {
        GradedF2Module m;
        for (const auto& [d, k] : dims) m.add_dim(d, k);
        return m;
    }

    void add_dim(int degree, long long count = 1) {
        if (count < 0) throw std::invalid_argument("negative dimension");
        if (count == 0) return;
        dims_[degree] += count;
        labels_.erase(degree);
    }

    void add_class(int degree, std::string label) {
        dims_[degree] += 1;
        labels_[degree].push_back(std::move(label));
    }

    long long dim(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? 0 : it->second;
    }

    const std::map<int, long long>& dims() const { return dims_; }

    bool degree_labeled(int degree) const {
        auto it = labels_.find(degree);
        return it != labels_.end() &&
               static_cast<long long>(it->second.size()) == dim(degree);
    }

    const std::vector<std::string>& labels(int degree) const {
        static const std::vector<std::string> none;
        auto it = labels_.find(degree);
        return it == labels_.end() ? none : it->second;
    }

    long long total_dim() const {
        long long t = 0;
        for (const auto& [d, k] : dims_) t += k;
        return t;
    }

    long long euler_char() const {
        long long t = 0;
        for (const auto& [d, k] : dims_) t += (d % 2 == 0) ? k : -k;
        return t;
    }

    std::optional<int> bottom_degree() const {
        if (dims_.empty()) return std::nullopt;
        return dims_.begin()->first;
    }

    std::optional<int> top_degree() const {
        if (dims_.empty()) return std::nullopt;
        return dims_.rbegin()->first;
    }

    bool operator==(const GradedF2Module& o) const { return dims_ == o.dims_; }

private:
    std::map<int, long long> dims_;
    std::map<int, std::vector<std::string>> labels_;

    friend GradedF2Module shift(const GradedF2Module&, int);
    friend GradedF2Module direct_sum(const std::vector<GradedF2Module>&);
};

inline GradedF2Module shift(const GradedF2Module& m, int s) {
    GradedF2Module out;
    for (const auto& [d, k] : m.dims_) out.dims_[d + s] = k;
    for (const auto& [d, ls] : m.labels_) out.labels_[d + s] = ls;
    return out;
}

inline GradedF2Module direct_sum(const std::vector<GradedF2Module>& ms) {
    GradedF2Module out;
    for (const auto& m : ms)
        for (const auto& [d, k] : m.dims_) out.dims_[d] += k;
    for (const auto& [d, k] : out.dims_) {
        std::vector<std::string> ls;
        bool complete = true;
        for (const auto& m : ms) {
            if (m.dim(d) == 0) continue;
            if (!m.degree_labeled(d)) {
                complete = false;
                break;
            }
            const auto& src = m.labels(d);
            ls.insert(ls.end(), src.begin(), src.end());
        }
        if (complete && !ls.empty()) out.labels_[d] = std::move(ls);
    }
    return out;
}

/**** Poincare series ****/

// Coefficients of sum_d dim(H^d) t^d over a window [0, D]. The flag records
// whether the summarized module has support above the window.
struct PoincareSeries {
    int window_hi = 0;
    std::vector<long long> coeffs;
    bool exact_beyond_window = true;

    bool operator==(const PoincareSeries& o) const {
        return window_hi == o.window_hi && coeffs == o.coeffs &&
               exact_beyond_window == o.exact_beyond_window;
    }
};

inline PoincareSeries poincare(const GradedF2Module& m, int window_hi) {
    if (window_hi < 0) throw std::invalid_argument("window must be [0, D] with D >= 0");
    PoincareSeries s;
    s.window_hi = window_hi;
    s.coeffs.assign(static_cast<size_t>(window_hi) + 1, 0);
    for (const auto& [d, k] : m.dims())
        if (0 <= d && d <= window_hi) s.coeffs[static_cast<size_t>(d)] = k;
    auto top = m.top_degree();
    s.exact_beyond_window = !top || *top <= window_hi;
    return s;
}

inline std::vector<std::pair<int, long long>> sparse_coeffs(const PoincareSeries& s) {
    std::vector<std::pair<int, long long>> out;
    for (int d = 0; d <= s.window_hi; ++d)
        if (s.coeffs[static_cast<size_t>(d)] != 0)
            out.emplace_back(d, s.coeffs[static_cast<size_t>(d)]);
    return out;
}

inline bool same_window_coeffs(const PoincareSeries& a, const PoincareSeries& b) {
    return a.window_hi == b.window_hi && a.coeffs == b.coeffs;
}

inline std::string series_to_string(const PoincareSeries& s) {
    std::string out;
    for (const auto& [d, c] : sparse_coeffs(s)) {
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + " ";
        out += "t^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

}  // namespace loopsplit
