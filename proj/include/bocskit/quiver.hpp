#pragma once

#include <string>
#include <vector>
#include <map>
#include <stdexcept>

namespace bocskit {

struct Arrow {
    std::string name;
    int src = 0;   // 1-based vertices
    int dst = 0;
    int degree = 0;  // 0 = solid, 1 = dashed
};

class BocsError : public std::runtime_error {
public:
    explicit BocsError(const std::string& what) : std::runtime_error(what) {}
};

// Biquiver on totally ordered vertices 1..n. Every arrow must go strictly
// upward (src < dst) and names are unique across both degrees.
class Quiver {
public:
    Quiver() = default;
    Quiver(int n, std::vector<Arrow> arrows);

    int vertexCount() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int i) const { return arrows_[i]; }
    int arrowCount() const { return static_cast<int>(arrows_.size()); }

    const std::vector<int>& solidIndices() const { return solid_; }
    const std::vector<int>& dashedIndices() const { return dashed_; }

    bool hasArrow(const std::string& name) const { return byName_.count(name) > 0; }
    int arrowIndex(const std::string& name) const;

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<int> solid_, dashed_;
    std::map<std::string, int> byName_;
};

}  // namespace bocskit
