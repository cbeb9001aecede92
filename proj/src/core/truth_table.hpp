#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "support/errors.hpp"

namespace bf {

/// A Boolean function of n variables as a packed 2^n bit vector.
///
/// Point encoding: index(x) = sum_j x_j * 2^(j-1), so x_1 is the least
/// significant bit of the index. Immutable use after construction is the
/// norm; all operations on tables are pure.
class TruthTable {
  public:
    static constexpr int kMaxVars = 26;  // 8 MiB table, 256 MiB spectrum

    TruthTable() = default;
    explicit TruthTable(int n, int fill_bit = 0);

    static TruthTable constant(int n, int bit) { return TruthTable(n, bit); }
    /// L_n, the all-variable linear (parity) function.
    static TruthTable parity_fn(int n);
    static TruthTable and_fn(int n);
    static TruthTable maj3();
    /// n <= 6: table given as the low 2^n bits of a word.
    static TruthTable from_u64(int n, uint64_t bits);

    int n() const { return n_; }
    uint64_t size() const { return 1ull << n_; }

    /// Checked point evaluation.
    int eval(uint64_t x) const {
        if (n_ == 0 || x >= size()) throw ArgumentError("eval: point out of range");
        return get(x);
    }
    int get(uint64_t i) const { return (int)((w_[i >> 6] >> (i & 63)) & 1u); }
    void set(uint64_t i, int b) {
        uint64_t m = 1ull << (i & 63);
        if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(uint64_t i) { w_[i >> 6] ^= 1ull << (i & 63); }

    uint64_t weight() const;
    bool balanced() const { return weight() * 2 == size(); }

    /// f ^ L_n (the dual); involution.
    TruthTable dual() const;
    TruthTable complement() const;
    TruthTable operator^(const TruthTable& o) const;

    /// n <= 6 only.
    uint64_t as_u64() const;

    bool operator==(const TruthTable&) const = default;

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words_mut() { return w_; }

    // -- text format: "n=<k>" then one lowercase hex line, byte i holds
    //    indices 8i..8i+7 with index 8i in the least significant bit.
    std::string to_hex() const;
    static TruthTable from_hex(int n, std::string_view hex);
    std::string to_text() const;
    static TruthTable parse_text(std::string_view text);
    static TruthTable read_file(const std::string& path);
    void write_file(const std::string& path) const;

  private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace bf
