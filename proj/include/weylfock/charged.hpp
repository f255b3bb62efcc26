#pragma once

#include <vector>

#include "weylfock/partitions.hpp"
#include "weylfock/qarith.hpp"

namespace weylfock {

/// |mu, c>: a partition with an integer charge shifting its contents.
struct ChargedPartition {
  Partition mu;
  Int charge = 0;
  auto operator<=>(const ChargedPartition&) const = default;
};

/// Strictly increasing xs (length n >= 1) and ys (length n-1) with
/// x1 < y1 < x2 < ... < y_{n-1} < x_n; the center is sum(xs) - sum(ys).
struct InterlacingSequence {
  std::vector<Int> xs;
  std::vector<Int> ys;

  Int center() const;
  auto operator<=>(const InterlacingSequence&) const = default;
};

/// Charged contents of the addable (xs) and removable (ys) boxes.
/// The center equals the charge.
InterlacingSequence to_interlacing(const ChargedPartition& cp);

/// Inverse of to_interlacing; rejects non-interlacing data.
ChargedPartition from_interlacing(const InterlacingSequence& seq);

/// Zeros at addable charged contents, poles at removable ones.
ContentRatio content_function(const ChargedPartition& cp);

/// Each content c becomes the root eps * q^c.
ResidueRatio residue_function(const ChargedPartition& cp, int eps);

/// Unique preimage of a single-signed residue function; rejects mixed
/// signs and data that does not interlace. Never repairs its input.
ChargedPartition invert_residue_function(const ResidueRatio& r, int eps);

}  // namespace weylfock
