#pragma once

/**
 * Dynamically sized bitset. The tag parameter keeps vertex sets and GF(2)
 * vectors from being mixed up; both share one implementation.
 */

#include "kappa/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kappa {

template <typename Tag>
class BasicBitset
{
public:
  using Word = std::uint64_t;
  static constexpr int word_bits = 64;

  BasicBitset() = default;

  explicit BasicBitset(int size) : _size(size), _words(word_count(size), 0) {
    if (size < 0)
      throw ContractViolation("negative bitset size");
  }

  BasicBitset(int size, std::initializer_list<int> members) : BasicBitset(size) {
    for (int v : members)
      set(v);
  }

  static auto from_mask(int size, std::uint64_t mask) -> BasicBitset {
    if (size > word_bits)
      throw ContractViolation("from_mask needs size <= 64");
    BasicBitset b(size);
    if (size > 0)
      b._words[0] = mask & low_mask(size);
    return b;
  }

  static auto full(int size) -> BasicBitset {
    BasicBitset b(size);
    std::fill(b._words.begin(), b._words.end(), ~Word{0});
    b.trim();
    return b;
  }

  auto size() const -> int { return _size; }

  auto test(int i) const -> bool {
    check_index(i);
    return (_words[i / word_bits] >> (i % word_bits)) & 1U;
  }

  auto set(int i, bool value = true) -> BasicBitset & {
    check_index(i);
    Word bit = Word{1} << (i % word_bits);
    if (value)
      _words[i / word_bits] |= bit;
    else
      _words[i / word_bits] &= ~bit;
    return *this;
  }

  auto reset(int i) -> BasicBitset & { return set(i, false); }

  auto flip(int i) -> BasicBitset & {
    check_index(i);
    _words[i / word_bits] ^= Word{1} << (i % word_bits);
    return *this;
  }

  auto count() const -> int {
    int c = 0;
    for (Word w : _words)
      c += std::popcount(w);
    return c;
  }

  auto empty() const -> bool {
    return std::all_of(_words.begin(), _words.end(), [](Word w) { return w == 0; });
  }

  auto any() const -> bool { return !empty(); }

  auto operator|=(const BasicBitset & o) -> BasicBitset & {
    same_universe(o);
    for (std::size_t w = 0; w < _words.size(); ++w)
      _words[w] |= o._words[w];
    return *this;
  }

  auto operator&=(const BasicBitset & o) -> BasicBitset & {
    same_universe(o);
    for (std::size_t w = 0; w < _words.size(); ++w)
      _words[w] &= o._words[w];
    return *this;
  }

  auto operator^=(const BasicBitset & o) -> BasicBitset & {
    same_universe(o);
    for (std::size_t w = 0; w < _words.size(); ++w)
      _words[w] ^= o._words[w];
    return *this;
  }

  // set difference
  auto operator-=(const BasicBitset & o) -> BasicBitset & {
    same_universe(o);
    for (std::size_t w = 0; w < _words.size(); ++w)
      _words[w] &= ~o._words[w];
    return *this;
  }

  friend auto operator|(BasicBitset a, const BasicBitset & b) -> BasicBitset { return a |= b; }
  friend auto operator&(BasicBitset a, const BasicBitset & b) -> BasicBitset { return a &= b; }
  friend auto operator^(BasicBitset a, const BasicBitset & b) -> BasicBitset { return a ^= b; }
  friend auto operator-(BasicBitset a, const BasicBitset & b) -> BasicBitset { return a -= b; }

  auto complement() const -> BasicBitset {
    BasicBitset c = *this;
    for (Word & w : c._words)
      w = ~w;
    c.trim();
    return c;
  }

  auto is_subset_of(const BasicBitset & o) const -> bool {
    same_universe(o);
    for (std::size_t w = 0; w < _words.size(); ++w)
      if (_words[w] & ~o._words[w])
        return false;
    return true;
  }

  auto intersects(const BasicBitset & o) const -> bool {
    same_universe(o);
    for (std::size_t w = 0; w < _words.size(); ++w)
      if (_words[w] & o._words[w])
        return true;
    return false;
  }

  // Parity of |this ∩ o|; the GF(2) inner product.
  auto dot(const BasicBitset & o) const -> bool {
    same_universe(o);
    Word acc = 0;
    for (std::size_t w = 0; w < _words.size(); ++w)
      acc ^= _words[w] & o._words[w];
    return std::popcount(acc) & 1;
  }

  // Index of the first set bit at or after `from`, or size() if none.
  auto find_next(int from) const -> int {
    if (from >= _size)
      return _size;
    std::size_t w = from / word_bits;
    Word cur = _words[w] & (~Word{0} << (from % word_bits));
    while (true) {
      if (cur)
        return static_cast<int>(w * word_bits + std::countr_zero(cur));
      if (++w == _words.size())
        return _size;
      cur = _words[w];
    }
  }

  auto find_first() const -> int { return find_next(0); }

  auto members() const -> std::vector<int> {
    std::vector<int> out;
    for (int i = find_first(); i < _size; i = find_next(i + 1))
      out.push_back(i);
    return out;
  }

  template <typename F>
  auto for_each(F && f) const -> void {
    for (int i = find_first(); i < _size; i = find_next(i + 1))
      f(i);
  }

  // Low 64 bits; only meaningful when size() <= 64.
  auto to_mask() const -> std::uint64_t {
    if (_size > word_bits)
      throw ContractViolation("to_mask needs size <= 64");
    return _words.empty() ? 0 : _words[0];
  }

  auto words() const -> const std::vector<Word> & { return _words; }

  // "{0, 3, 4}"
  auto to_string() const -> std::string {
    std::string s = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first)
        s += ", ";
      s += std::to_string(i);
      first = false;
    });
    return s + "}";
  }

  friend auto operator==(const BasicBitset & a, const BasicBitset & b) -> bool {
    return a._size == b._size && a._words == b._words;
  }

  // Lexicographic order on the member lists (lowest index first).
  friend auto lex_less(const BasicBitset & a, const BasicBitset & b) -> bool {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

private:
  static auto word_count(int size) -> std::size_t {
    return size <= 0 ? 0 : static_cast<std::size_t>((size + word_bits - 1) / word_bits);
  }

  static auto low_mask(int bits) -> Word {
    return bits >= word_bits ? ~Word{0} : ((Word{1} << bits) - 1);
  }

  auto trim() -> void {
    if (_size % word_bits != 0 && !_words.empty())
      _words.back() &= low_mask(_size % word_bits);
  }

  auto check_index(int i) const -> void {
    if (i < 0 || i >= _size)
      throw ContractViolation("bit index " + std::to_string(i) + " outside universe of " +
                              std::to_string(_size));
  }

  auto same_universe(const BasicBitset & o) const -> void {
    if (o._size != _size)
      throw ContractViolation("universe mismatch: " + std::to_string(_size) + " vs " +
                              std::to_string(o._size));
  }

  int _size = 0;
  std::vector<Word> _words;
};

struct VertexTag;
struct Gf2Tag;

using VertexSet = BasicBitset<VertexTag>;
using BitVector = BasicBitset<Gf2Tag>;

} // namespace kappa
