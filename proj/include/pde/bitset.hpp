#pragma once

#include <cstdint>
#include <vector>

namespace pde {

// Fixed-universe dynamic bitset used for subgroup membership sets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : bits_(static_cast<size_t>((universe + 63) / 64), 0), n_(universe) {}

    void set(int i) { bits_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { bits_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
    int universe() const { return n_; }

    int count() const {
        int c = 0;
        for (uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool contains(const Bitset& other) const {
        for (size_t k = 0; k < bits_.size(); ++k)
            if (other.bits_[k] & ~bits_[k]) return false;
        return true;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r = *this;
        for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] |= o.bits_[k];
        return r;
    }

    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (size_t k = 0; k < bits_.size(); ++k) r.bits_[k] &= o.bits_[k];
        return r;
    }

    bool operator==(const Bitset& o) const { return bits_ == o.bits_; }
    bool operator<(const Bitset& o) const { return bits_ < o.bits_; }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : bits_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

private:
    std::vector<uint64_t> bits_;
    int n_ = 0;
};

}  // namespace pde
