#include "bruhat/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bruhat {

WeylElement WeylElement::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return WeylElement(std::move(img));
}

WeylElement WeylElement::longest(int n) {
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = n - 1 - j;
    return WeylElement(std::move(img));
}

WeylElement WeylElement::transposition(int n, int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        throw index_out_of_range("transposition: bad indices");
    auto w = identity(n);
    std::swap(w.img_[a], w.img_[b]);
    return w;
}

WeylElement WeylElement::from_one_line(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) {
        int v = images[j] - 1;
        if (v < 0 || v >= n || seen[v])
            throw parse_error("WeylElement: not a permutation");
        seen[v] = true;
        img[j] = v;
    }
    return WeylElement(std::move(img));
}

WeylElement WeylElement::parse(const std::string& s) {
    std::vector<int> images;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) images.push_back(std::stoi(tok));
    if (images.empty()) throw parse_error("WeylElement: empty string");
    return from_one_line(images);
}

WeylElement WeylElement::inverse() const {
    std::vector<int> inv(img_.size());
    for (int j = 0; j < n(); ++j) inv[img_[j]] = j;
    return WeylElement(std::move(inv));
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
    if (n() != rhs.n()) throw dimension_mismatch("WeylElement product");
    std::vector<int> img(img_.size());
    for (int j = 0; j < n(); ++j) img[j] = img_[rhs.img_[j]];
    return WeylElement(std::move(img));
}

unsigned WeylElement::length() const {
    unsigned c = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++c;
    return c;
}

std::string WeylElement::str() const {
    std::ostringstream os;
    for (int j = 0; j < n(); ++j) {
        if (j) os << ",";
        os << img_[j] + 1;
    }
    return os.str();
}

std::vector<WeylElement> all_weyl(int n) {
    std::vector<int> one(n);
    std::iota(one.begin(), one.end(), 1);
    std::vector<WeylElement> out;
    do {
        out.push_back(WeylElement::from_one_line(one));
    } while (std::next_permutation(one.begin(), one.end()));
    return out;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
    if (u.n() != w.n()) throw dimension_mismatch("bruhat_leq");
    int n = u.n();
    // u <= w iff for every prefix length k the sorted image prefixes satisfy
    // sort(u(1..k))[r] <= sort(w(1..k))[r] entrywise.
    std::vector<int> su, sw;
    su.reserve(n);
    sw.reserve(n);
    for (int k = 0; k < n; ++k) {
        su.insert(std::upper_bound(su.begin(), su.end(), u(k)), u(k));
        sw.insert(std::upper_bound(sw.begin(), sw.end(), w(k)), w(k));
        for (int r = 0; r <= k; ++r)
            if (su[r] > sw[r]) return false;
    }
    return true;
}

std::vector<WeylElement> standard_ordering(int n, OrderingPreset preset) {
    if (preset == OrderingPreset::PaperN3) {
        if (n != 3) throw invalid_preset("paper-n3 ordering requires n = 3");
        return {
            WeylElement::from_one_line({1, 2, 3}),
            WeylElement::from_one_line({2, 1, 3}),
            WeylElement::from_one_line({1, 3, 2}),
            WeylElement::from_one_line({3, 1, 2}),
            WeylElement::from_one_line({2, 3, 1}),
            WeylElement::from_one_line({3, 2, 1}),
        };
    }
    auto order = all_weyl(n);
    std::stable_sort(order.begin(), order.end(),
                     [](const WeylElement& a, const WeylElement& b) {
                         unsigned la = a.length(), lb = b.length();
                         if (la != lb) return la < lb;
                         return a.images() < b.images();
                     });
    return order;
}

OrderingPreset parse_preset(const std::string& name) {
    if (name == "default") return OrderingPreset::Default;
    if (name == "paper-n3") return OrderingPreset::PaperN3;
    throw invalid_preset("unknown ordering preset: " + name);
}

size_t ordering_index(const std::vector<WeylElement>& order, const WeylElement& w) {
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == w) return i;
    throw index_out_of_range("ordering_index: element not in ordering");
}

PositionMask PositionMask::n_w(const WeylElement& w) {
    PositionMask m;
    auto winv = w.inverse();
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            if (winv(i) > winv(j)) m.pos.insert({i, j});
    return m;
}

PositionMask PositionMask::n_prime_w(const WeylElement& w) {
    PositionMask m;
    auto winv = w.inverse();
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j)
            if (winv(i) < winv(j)) m.pos.insert({i, j});
    return m;
}

PositionMask PositionMask::level_one(int n, int j0) {
    if (j0 < 1 || j0 > n) throw index_out_of_range("level_one: bad j0");
    PositionMask m;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (i + 1 <= j0 && j0 <= j + 1) m.pos.insert({i, j});
    return m;
}

PositionMask PositionMask::intersect(const PositionMask& rhs) const {
    PositionMask m;
    for (auto& q : pos)
        if (rhs.pos.count(q)) m.pos.insert(q);
    return m;
}

} // namespace bruhat
