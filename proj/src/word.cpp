#include "tubular/word.hpp"

#include <sstream>

#include "tubular/error.hpp"

namespace tubular {

Word reduce_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word multiply(const Word& a, const Word& b) {
  Word cat = a;
  cat.insert(cat.end(), b.begin(), b.end());
  return reduce_word(cat);
}

Word power(const Word& w, const Integer& n) {
  Word reduced = reduce_word(w);
  if (reduced.size() == 1) return reduce_word({{reduced[0].gen, reduced[0].exp * n}});
  Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (Integer i = 0; i < abs(n); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduce_word(out);
}

Word commutator(const Word& a, const Word& b) {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

Integer word_length(const Word& w) {
  Integer n = 0;
  for (const Letter& l : w) n += abs(l.exp);
  return n;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const Letter& l : w) {
    if (l.gen >= images.size()) throw Error(ErrorCode::MissingGenerator, "no image for generator " + std::to_string(l.gen));
    Word piece = power(images[l.gen], l.exp);
    out.insert(out.end(), piece.begin(), piece.end());
    out = reduce_word(out);
  }
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    const Letter& l = w[i];
    os << (l.gen < names.size() ? names[l.gen] : "g" + std::to_string(l.gen));
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

}  // namespace tubular
