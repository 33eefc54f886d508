#include "fractv/gl_weights.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace fractv {

GLWeights gl_derivative_weights(double r, int m) {
    if (r < 0.0) throw std::invalid_argument("gl_derivative_weights: need r >= 0");
    if (m < 0) throw std::invalid_argument("gl_derivative_weights: need m >= 0");
    GLWeights out;
    out.order = r;
    out.kind = GLKind::derivative;
    out.w.resize(m + 1);
    out.w[0] = 1.0;
    for (int j = 1; j <= m; ++j) out.w[j] = out.w[j - 1] * (1.0 - (r + 1.0) / j);
    return out;
}

GLWeights gl_integral_weights(double r, int m) {
    if (!(r > 0.0)) throw std::invalid_argument("gl_integral_weights: need r > 0");
    if (m < 0) throw std::invalid_argument("gl_integral_weights: need m >= 0");
    GLWeights out;
    out.order = r;
    out.kind = GLKind::integral;
    out.w.resize(m + 1);
    out.w[0] = 1.0;
    for (int j = 1; j <= m; ++j) out.w[j] = out.w[j - 1] * (1.0 + (r - 1.0) / j);
    return out;
}

namespace {

struct CacheKey {
    GLKind kind;
    double r;
    bool operator<(const CacheKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        return r < o.r;
    }
};

std::mutex g_cache_mutex;
std::map<CacheKey, std::shared_ptr<const std::vector<double>>>& cache_map() {
    static std::map<CacheKey, std::shared_ptr<const std::vector<double>>> m;
    return m;
}

}  // namespace

std::shared_ptr<const std::vector<double>> gl_weights_cached(GLKind kind, double r, int m) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& map = cache_map();
    const CacheKey key{kind, r};
    auto it = map.find(key);
    if (it != map.end() && static_cast<int>(it->second->size()) >= m + 1) return it->second;
    auto table = (kind == GLKind::derivative) ? gl_derivative_weights(r, m)
                                              : gl_integral_weights(r, m);
    auto stored = std::make_shared<const std::vector<double>>(std::move(table.w));
    map[key] = stored;
    return stored;
}

}  // namespace fractv
