#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#if defined(__cpp_lib_bitops)
#include <bit>
#endif

namespace domlab {

/// Fixed-width set of vertex ids backed by a multi-word bitset.
///
/// The width is tied to the owning graph's vertex count; all binary
/// operations require equal widths. Sets compare and sort in
/// colexicographic order, i.e. by the numeric value of the bit pattern.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    static VertexSet full(std::size_t width) {
        VertexSet s(width);
        for (std::size_t v = 0; v < width; ++v) s.set(v);
        return s;
    }

    static VertexSet of(std::size_t width, std::initializer_list<int> vs) {
        VertexSet s(width);
        for (int v : vs) s.set(static_cast<std::size_t>(v));
        return s;
    }

    std::size_t width() const { return width_; }

    bool test(std::size_t v) const {
        check_vertex(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(std::size_t v) {
        check_vertex(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(std::size_t v) {
        check_vertex(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += popcount64(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !empty(); }

    VertexSet& operator|=(const VertexSet& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator^=(const VertexSet& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the width.
    VertexSet complement() const {
        VertexSet r(width_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool contains(const VertexSet& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (o.words_[i] & ~words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + countr_zero64(words_[i]));
        return -1;
    }

    /// Smallest member greater than v, or -1. Together with first() this
    /// iterates members in increasing order.
    int next(int v) const {
        std::size_t i = static_cast<std::size_t>(v + 1) >> 6;
        if (i >= words_.size()) return -1;
        std::uint64_t w = words_[i] >> ((v + 1) & 63) << ((v + 1) & 63);
        while (true) {
            if (w) return static_cast<int>(i * 64 + countr_zero64(w));
            if (++i >= words_.size()) return -1;
            w = words_[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    bool operator==(const VertexSet& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    /// Colexicographic (numeric) order.
    bool operator<(const VertexSet& o) const {
        check_width(o);
        for (std::size_t i = words_.size(); i-- > 0;) {
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        }
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 0x100000001b3ull;
        };
        mix(width_);
        for (std::uint64_t w : words_) mix(w);
        return static_cast<std::size_t>(h);
    }

    /// "{0,2,5}"
    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v = first(); v >= 0; v = next(v)) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

private:
    void check_vertex(std::size_t v) const {
        if (v >= width_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                                 " out of range for width " + std::to_string(width_));
    }
    void check_width(const VertexSet& o) const {
        if (width_ != o.width_) throw std::invalid_argument("VertexSet: width mismatch");
    }
    void trim() {
        if (words_.empty()) return;
        std::size_t used = width_ & 63;
        if (used) words_.back() &= (std::uint64_t{1} << used) - 1;
    }

    static unsigned popcount64(std::uint64_t w) {
#if defined(__cpp_lib_bitops)
        return static_cast<unsigned>(std::popcount(w));
#else
        return static_cast<unsigned>(__builtin_popcountll(w));
#endif
    }
    static unsigned countr_zero64(std::uint64_t w) {
#if defined(__cpp_lib_bitops)
        return static_cast<unsigned>(std::countr_zero(w));
#else
        return static_cast<unsigned>(__builtin_ctzll(w));
#endif
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace domlab
