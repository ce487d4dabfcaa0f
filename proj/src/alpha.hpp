#ifndef HIRSCHLOOP_ALPHA_HPP
#define HIRSCHLOOP_ALPHA_HPP

#include "basics.hpp"

namespace hirsch {

enum class AlphaVariant { Plain, A11, A12, A21, A22 };

// Shuffle-product coefficient tables.  `height_one` selects the n = 1 table
// (Plain variant); the upper-index variants apply for n > 1.  `odd_x` is the
// parity of |x|.  The (k odd, l even) slot of the even-|x| n = 1 table and
// the (k even, l odd) slot of the n > 1 table are filled by the symmetry
// alpha_{k,l} = alpha_{l,k}.
Int alpha(int k, int l, bool height_one, bool odd_x, AlphaVariant v);

} // namespace hirsch

#endif
