#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/errors.hpp"

namespace bruhat {

/// Permutation in S_n as a Weyl group element.  Stored 0-based: img[j] is
/// w(j).  The associated permutation matrix has a 1 at (w(j), j).
class WeylElement {
public:
    static WeylElement identity(int n);
    static WeylElement longest(int n); // w0, order reversing
    static WeylElement transposition(int n, int a, int b);

    /// One-line images, 1-based, e.g. {2,3,1}.
    static WeylElement from_one_line(const std::vector<int>& images);
    /// Comma-separated 1-based one-line notation "2,3,1".
    static WeylElement parse(const std::string& s);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[j]; } // 0-based
    const std::vector<int>& images() const { return img_; }

    WeylElement inverse() const;
    WeylElement operator*(const WeylElement& rhs) const; // (w*u)(j) = w(u(j))

    /// Inversion count.
    unsigned length() const;

    bool operator==(const WeylElement& rhs) const { return img_ == rhs.img_; }
    bool operator!=(const WeylElement& rhs) const { return img_ != rhs.img_; }
    bool operator<(const WeylElement& rhs) const { return img_ < rhs.img_; }

    std::string str() const; // "2,3,1"

private:
    explicit WeylElement(std::vector<int> img) : img_(std::move(img)) {}
    std::vector<int> img_; // 0-based images
};

/// All of S_n in lexicographic one-line order.
std::vector<WeylElement> all_weyl(int n);

/// Strong Bruhat order u <= w via the sorted-prefix dominance criterion.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

enum class OrderingPreset { Default, PaperN3 };

/// A total ordering w_1 = id, ..., w_{n!} = w0 refining the Bruhat order.
/// Default sorts by (length, lexicographic one-line images); PaperN3 is the
/// fixed six-element chain used by the n = 3 counterexample and requires
/// n = 3.
std::vector<WeylElement> standard_ordering(int n, OrderingPreset preset);

OrderingPreset parse_preset(const std::string& name);

/// Index of w in an ordering (0-based).  Throws if absent.
size_t ordering_index(const std::vector<WeylElement>& order, const WeylElement& w);

/// Sets of strictly upper-triangular positions (0-based pairs i < j).
struct PositionMask {
    std::set<std::pair<int, int>> pos;

    /// {(i,j) : w^{-1}(i) > w^{-1}(j)} — where N_w lives.
    static PositionMask n_w(const WeylElement& w);
    /// {(i,j) : w^{-1}(i) < w^{-1}(j)} — where N'_w lives.
    static PositionMask n_prime_w(const WeylElement& w);
    /// {(i,j) : i+1 <= j0 <= j+1} for 1-based j0 — the N^{(1)}_{j0} support.
    static PositionMask level_one(int n, int j0);

    PositionMask intersect(const PositionMask& rhs) const;
    bool contains(int i, int j) const { return pos.count({i, j}) > 0; }
};

} // namespace bruhat
