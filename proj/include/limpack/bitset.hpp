#pragma once

#include <cstdint>
#include <vector>

namespace limpack {

// Fixed-width bitset keyed by vertex id: O(1) membership, iteration in
// ascending id order.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_) if (x) return true;
        return false;
    }

    void clear() {
        for (uint64_t& x : w_) x = 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                const int b = __builtin_ctzll(x);
                out.push_back(static_cast<int>(wi << 6) + b);
                x &= x - 1;
            }
        }
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace limpack
