#include "ggp/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <ostream>
#include <set>

#include "ggp/error.hpp"

namespace ggp {

namespace {

void validate(const std::vector<unsigned>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw DomainError("partition parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition strip_zeros(std::vector<unsigned> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Partition(std::move(rows));
}

}  // namespace

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  validate(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

Partition Partition::parse(std::string_view text) {
  if (text == "-") return Partition{};
  if (text.empty()) throw DomainError("empty partition text (use '-' for the empty partition)");
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw DomainError("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

unsigned Partition::part_at(std::size_t i) const {
  if (i == 0) throw DomainError("part index is 1-based");
  return i <= parts_.size() ? parts_[i - 1] : 0;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  // Larger leading parts first. A proper prefix (only possible across
  // different sizes) sorts after its extensions.
  const std::size_t n = std::min(a.parts_.size(), b.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.parts_[i] != b.parts_[i])
      return a.parts_[i] > b.parts_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return b.parts_.size() <=> a.parts_.size();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '[';
  const auto parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  return os << ']';
}

const char* to_string(Transversality t) {
  switch (t) {
    case Transversality::NotClose: return "not-close";
    case Transversality::CloseNotEven: return "close-not-even";
    case Transversality::Transverse2: return "2-transverse";
    case Transversality::Transverse: return "transverse";
  }
  return "?";
}

Partition transpose(const Partition& lambda) {
  std::vector<unsigned> cols(lambda.first(), 0);
  for (unsigned row : lambda.parts())
    for (unsigned j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool is_close(const Partition& lambda, const Partition& mu) {
  const std::size_t rows = std::max(lambda.length(), mu.length());
  for (std::size_t i = 1; i <= rows; ++i) {
    const unsigned a = lambda.part_at(i);
    const unsigned b = mu.part_at(i);
    if ((a > b ? a - b : b - a) > 1) return false;
  }
  return true;
}

bool is_even(const Partition& lambda) {
  const auto parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if ((j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

Partition common_parts(const Partition& lambda, const Partition& mu) {
  std::vector<unsigned> shared;
  const std::size_t rows = std::min(lambda.length(), mu.length());
  for (std::size_t i = 1; i <= rows; ++i)
    if (lambda.part_at(i) == mu.part_at(i)) shared.push_back(lambda.part_at(i));
  return Partition(std::move(shared));
}

Transversality transversality(const Partition& lambda, const Partition& mu) {
  if (!is_close(lambda, mu)) return Transversality::NotClose;
  const Partition shared = common_parts(lambda, mu);
  if (shared.empty()) return Transversality::Transverse;
  return is_even(shared) ? Transversality::Transverse2 : Transversality::CloseNotEven;
}

Partition first_row_removed(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("empty partition has no first row");
  const auto parts = lambda.parts();
  return Partition(std::vector<unsigned>(parts.begin() + 1, parts.end()));
}

Partition prepend_row(unsigned row, const Partition& lambda) {
  if (row < lambda.first() || row == 0)
    throw DomainError("prepended row must be positive and at least the first part");
  std::vector<unsigned> rows{row};
  rows.insert(rows.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(rows));
}

std::vector<DominoMove> two_hook_removals(const Partition& lambda) {
  std::vector<DominoMove> moves;
  const std::vector<unsigned> rows(lambda.parts().begin(), lambda.parts().end());
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i < k; ++i) {
    const unsigned below = i + 1 < k ? rows[i + 1] : 0;
    // Horizontal: last two cells of row i.
    if (rows[i] >= below + 2) {
      auto next = rows;
      next[i] -= 2;
      moves.push_back({strip_zeros(std::move(next)), DominoType::Horizontal});
    }
    // Vertical: last cell of rows i and i+1, which must end in the same column.
    if (i + 1 < k && rows[i] == rows[i + 1]) {
      const unsigned below2 = i + 2 < k ? rows[i + 2] : 0;
      if (rows[i + 1] > below2) {
        auto next = rows;
        --next[i];
        --next[i + 1];
        moves.push_back({strip_zeros(std::move(next)), DominoType::Vertical});
      }
    }
  }
  std::sort(moves.begin(), moves.end(), [](const DominoMove& a, const DominoMove& b) {
    if (a.result != b.result) return a.result < b.result;
    return a.type < b.type;
  });
  return moves;
}

std::vector<Partition> two_hook_additions(const Partition& lambda) {
  std::set<Partition> out;
  std::vector<unsigned> rows(lambda.parts().begin(), lambda.parts().end());
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i <= k; ++i) {
    const unsigned current = i < k ? rows[i] : 0;
    const unsigned above = i == 0 ? ~0U : rows[i - 1];
    // Horizontal: two cells at the end of row i.
    if (current + 2 <= above) {
      auto next = rows;
      if (i == k) next.push_back(0);
      next[i] += 2;
      out.insert(Partition(std::move(next)));
    }
    // Vertical: one cell at the end of rows i and i+1, both landing in the same column.
    const unsigned next_row = i + 1 < k ? rows[i + 1] : 0;
    if (current == next_row && current + 1 <= above) {
      auto next = rows;
      next.resize(std::max<std::size_t>(next.size(), i + 2), 0);
      ++next[i];
      ++next[i + 1];
      out.insert(Partition(std::move(next)));
    }
  }
  return {out.begin(), out.end()};
}

namespace {

void enumerate(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  enumerate(n, n, prefix, out);
  return out;
}

}  // namespace ggp
