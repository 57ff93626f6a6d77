#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ggp {

/// A Young diagram: weakly decreasing positive parts. The empty partition
/// is a valid value (the label of the unique representation of U_0).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<unsigned> parts);
  explicit Partition(std::vector<unsigned> parts);

  /// Parses "3,2,1"; the empty partition is spelled "-".
  static Partition parse(std::string_view text);

  std::span<const unsigned> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// λ_i with 1-based i; zero past the last row.
  unsigned part_at(std::size_t i) const;

  /// Largest part, 0 for the empty partition.
  unsigned first() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Reverse-lexicographic on the part sequences: [4] < [3,1] < [2,2].
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<unsigned> parts_;
  unsigned size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

enum class Transversality { NotClose, CloseNotEven, Transverse2, Transverse };

/// 2-transverse in the broad sense: close with an even intersection.
inline bool is_two_transverse(Transversality t) {
  return t == Transversality::Transverse2 || t == Transversality::Transverse;
}

const char* to_string(Transversality t);

enum class DominoType { Horizontal, Vertical };  // (2) and (1^2)

struct DominoMove {
  Partition result;
  DominoType type;
  friend bool operator==(const DominoMove&, const DominoMove&) = default;
};

Partition transpose(const Partition& lambda);

inline unsigned part_at(const Partition& lambda, std::size_t i) { return lambda.part_at(i); }

bool is_close(const Partition& lambda, const Partition& mu);
bool is_even(const Partition& lambda);

/// λ ∩ μ: the parts of λ at the positions where λ and μ agree.
Partition common_parts(const Partition& lambda, const Partition& mu);

Transversality transversality(const Partition& lambda, const Partition& mu);

inline bool two_transverse(const Partition& lambda, const Partition& mu) {
  return is_two_transverse(transversality(lambda, mu));
}

/// λ_*; throws DomainError on the empty partition.
Partition first_row_removed(const Partition& lambda);

/// [row, λ]; throws DomainError unless row ≥ λ_1.
Partition prepend_row(unsigned row, const Partition& lambda);

/// Every removable domino, sorted by result (canonical order) then type.
std::vector<DominoMove> two_hook_removals(const Partition& lambda);

/// Every shape obtained by adding one domino, canonical order, no duplicates.
std::vector<Partition> two_hook_additions(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

}  // namespace ggp
