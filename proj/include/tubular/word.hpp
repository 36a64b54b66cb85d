#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tubular/integer.hpp"

namespace tubular {

struct Letter {
  std::size_t gen;
  Integer exp;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in a free group as a sequence of generator powers. Reduced words have
/// no zero exponents and no two adjacent letters on the same generator.
using Word = std::vector<Letter>;

Word reduce_word(const Word& w);
Word inverse(const Word& w);
/// Concatenation followed by free reduction.
Word multiply(const Word& a, const Word& b);
Word power(const Word& w, const Integer& n);
Word commutator(const Word& a, const Word& b);

/// Total letter count counted with multiplicity, sum of |exp|.
Integer word_length(const Word& w);

/// Substitutes images[gen] for each generator and reduces.
Word substitute(const Word& w, const std::vector<Word>& images);

/// Rendering such as "x_v t_e x_v^-1"; names[gen] labels each generator.
std::string format_word(const Word& w, const std::vector<std::string>& names);

}  // namespace tubular
