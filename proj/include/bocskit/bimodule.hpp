#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bocskit/path_algebra.hpp"

namespace bocskit {

// Basis of the j-th tensor power of the kernel bimodule over A.
// An item is the alternating word  p . v1 . m1 . v2 . ... . m_{j-1} . vj . q
// with dashed generators v_k and basis paths of A between them; vj acts first
// (innermost), v1 last. The case j = 1 is the bimodule basis itself, realising
// Vbar = direct sum of A e_l (x) e_i A over dashed generators v : i -> l.
//
// The canonical form of a pure tensor x (x)_A y puts all middle coefficients on
// the left factor, i.e. the right factor starts with its dashed generator.
class TensorPowerBasis {
public:
    struct Item {
        std::vector<int> dashed;  // arrow indices, outermost first (v1..vj)
        std::vector<int> mids;    // A-basis indices between consecutive dashed
        int p = -1;               // A-basis index, leftmost (acts last)
        int q = -1;               // A-basis index, rightmost (acts first)
        int src = 0, dst = 0;
    };

    TensorPowerBasis() = default;
    TensorPowerBasis(const Quiver& quiver, const PathAlgebra& algebra, int power);

    int power() const { return power_; }
    int size() const { return static_cast<int>(items_.size()); }
    const Item& item(int i) const { return items_[i]; }
    std::optional<int> indexOf(const Item& it) const;
    int src(int i) const { return items_[i].src; }
    int dst(int i) const { return items_[i].dst; }

    // Items with given endpoints.
    std::vector<int> slice(int dst, int src) const;
    // Bare generator item (trivial p, mids absent, trivial q) for a dashed arrow; power 1 only.
    std::optional<int> bareIndex(int dashedArrow) const;

    std::string displayItem(int i) const;            // e.g. "b*phi" or "psi @ phi"
    std::string display(const LinComb& elem) const;  // signed sum of items

private:
    const Quiver* quiver_ = nullptr;
    const PathAlgebra* algebra_ = nullptr;
    int power_ = 0;
    std::vector<Item> items_;
    std::map<std::vector<int>, int> index_;  // encoded item -> index
    std::vector<int> dashedOrder_;           // dashed arrows sorted by name

    std::vector<int> encode(const Item& it) const;
    friend class BimoduleOps;
};

// Operations tying A-action and tensor concatenation together over a fixed
// quiver/algebra pair; tensor power bases are built on demand.
class BimoduleOps {
public:
    BimoduleOps(const Quiver& quiver, const PathAlgebra& algebra);

    const Quiver& quiver() const { return *quiver_; }
    const PathAlgebra& algebra() const { return *algebra_; }

    const TensorPowerBasis& powerBasis(int power) const;
    const TensorPowerBasis& vbar() const { return powerBasis(1); }

    // m_l, m_r: action of an algebra basis element on a power-j item.
    LinComb leftMulBasis(int aBasis, int item, int power) const;
    LinComb rightMulBasis(int item, int aBasis, int power) const;
    LinComb leftMul(const LinComb& a, const LinComb& x, int power) const;
    LinComb rightMul(const LinComb& x, const LinComb& a, int power) const;

    // Concatenation  x (x)_A y  of a power-a item with a power-b item.
    LinComb tensorItems(int xItem, int aPower, int yItem, int bPower) const;
    LinComb tensor(const LinComb& x, int aPower, const LinComb& y, int bPower) const;

private:
    const Quiver* quiver_;
    const PathAlgebra* algebra_;
    // keyed by power; node-based so handed-out references stay valid while
    // higher powers are built on demand; guarded for concurrent sharing
    mutable std::mutex powersMutex_;
    mutable std::map<int, TensorPowerBasis> powers_;
};

}  // namespace bocskit
