#include "boolgrade/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "boolgrade/errors.hpp"

namespace boolgrade {

// ---------------------------------------------------------------- LetterSet

LetterSet::LetterSet(std::initializer_list<int> letters) {
  for (int k : letters) insert(k);
}

LetterSet LetterSet::interval(int lo, int hi) {
  LetterSet s;
  for (int k = lo; k <= hi; ++k) s.insert(k);
  return s;
}

int LetterSet::min() const { return std::countr_zero(bits_); }

int LetterSet::max() const { return 31 - std::countl_zero(bits_); }

std::vector<int> LetterSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

void LetterSet::insert(int k) {
  if (k < 1 || k > 31) {
    throw InvalidArgument("letter out of range: " + std::to_string(k));
  }
  bits_ |= (1u << k);
}

void LetterSet::erase(int k) {
  if (k >= 1 && k <= 31) bits_ &= ~(1u << k);
}

std::strong_ordering operator<=>(LetterSet a, LetterSet b) {
  return a.members() <=> b.members();
}

std::string to_string(LetterSet s) {
  std::string out = "{";
  bool first = true;
  for (int k : s.members()) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::span<const int> images) {
  const auto n = images.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxDegree)) {
    throw InvalidArgument("permutation degree must lie in [1, 16], got " +
                          std::to_string(n));
  }
  std::uint32_t seen = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > static_cast<int>(n) || ((seen >> v) & 1u)) {
      throw InvalidArgument("not a permutation of [1, " + std::to_string(n) +
                            "]");
    }
    seen |= 1u << v;
    images_[i] = static_cast<std::uint8_t>(v);
  }
  degree_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidArgument("degree out of range: " + std::to_string(n));
  }
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.images_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p = identity(n);
  std::reverse(p.images_.begin(), p.images_.begin() + n);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  return identity(n).times_simple(i);
}

Permutation Permutation::from_word(int n, std::span<const int> letters) {
  Permutation p = identity(n);
  for (int a : letters) p = p.times_simple(a);
  return p;
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + degree_);
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.degree_ = degree_;
  for (int i = 0; i < degree_; ++i) {
    p.images_[images_[i] - 1] = static_cast<std::uint8_t>(i + 1);
  }
  return p;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= degree_) {
    throw InvalidArgument("generator index " + std::to_string(i) +
                          " out of range for S_" + std::to_string(degree_));
  }
  Permutation p = *this;
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::simple_times(int i) const {
  if (i < 1 || i >= degree_) {
    throw InvalidArgument("generator index " + std::to_string(i) +
                          " out of range for S_" + std::to_string(degree_));
  }
  Permutation p = *this;
  for (int k = 0; k < degree_; ++k) {
    if (p.images_[k] == i) {
      p.images_[k] = static_cast<std::uint8_t>(i + 1);
    } else if (p.images_[k] == i + 1) {
      p.images_[k] = static_cast<std::uint8_t>(i);
    }
  }
  return p;
}

Permutation Permutation::swap_positions(int i, int j) const {
  Permutation p = *this;
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < degree_; ++i) {
    for (int j = i + 1; j < degree_; ++j) {
      if (images_[i] > images_[j]) ++inv;
    }
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.images_ <=> b.images_;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the used bytes.
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < degree_; ++i) {
    h ^= images_[i];
    h *= 1099511628211ull;
  }
  return h ^ degree_;
}

// ----------------------------------------------------------- free functions

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  std::vector<int> out(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) out[i - 1] = a(b(i));
  return Permutation(out);
}

int length(const Permutation& w) { return w.length(); }

SupportSet descents(const Permutation& w, Side side) {
  const Permutation x = side == Side::Right ? w : w.inverse();
  SupportSet d;
  for (int i = 1; i < x.degree(); ++i) {
    if (x(i) > x(i + 1)) d.insert(i);
  }
  return d;
}

SupportSet support(const Permutation& w) {
  SupportSet s;
  int prefix_max = 0;
  for (int k = 1; k < w.degree(); ++k) {
    prefix_max = std::max(prefix_max, w(k));
    if (prefix_max != k) s.insert(k);
  }
  return s;
}

bool is_boolean(const Permutation& w) {
  return w.length() == support(w).size();
}

bool pattern_contains(const Permutation& w, const Permutation& p) {
  const int n = w.degree();
  const int k = p.degree();
  if (k > n) return false;
  std::vector<int> pos(static_cast<std::size_t>(k));
  // Enumerate k-subsets of positions in lexicographic order.
  for (int i = 0; i < k; ++i) pos[i] = i + 1;
  while (true) {
    bool match = true;
    for (int a = 0; a < k && match; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if ((w(pos[a]) < w(pos[b])) != (p(a + 1) < p(b + 1))) {
          match = false;
          break;
        }
      }
    }
    if (match) return true;
    int i = k - 1;
    while (i >= 0 && pos[i] == n - (k - 1 - i)) --i;
    if (i < 0) return false;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

bool is_boolean_by_patterns(const Permutation& w) {
  return !pattern_contains(w, Permutation{3, 2, 1}) &&
         !pattern_contains(w, Permutation{3, 4, 1, 2});
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw InvalidArgument("degree " + std::to_string(n) + " out of range");
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> boolean_permutations(int n) {
  auto all = all_permutations(n);
  std::erase_if(all, [](const Permutation& w) { return !is_boolean(w); });
  return all;
}

// ------------------------------------------------------------- ReducedWord

bool is_reduced(int degree, std::span<const int> letters) {
  for (int a : letters) {
    if (a < 1 || a >= degree) return false;
  }
  return Permutation::from_word(degree, letters).length() ==
         static_cast<int>(letters.size());
}

ReducedWord::ReducedWord(int degree, std::vector<int> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree < 1 || degree > kMaxDegree) {
    throw InvalidArgument("degree out of range: " + std::to_string(degree));
  }
  for (int a : letters_) {
    if (a < 1 || a >= degree) {
      throw InvalidArgument("letter " + std::to_string(a) +
                            " out of range for S_" + std::to_string(degree));
    }
  }
  if (!is_reduced(degree, letters_)) {
    throw InvalidArgument("word " + compact_letters(letters_) +
                          " is not reduced");
  }
}

Permutation ReducedWord::evaluate() const {
  return Permutation::from_word(degree_, letters_);
}

std::vector<int> ReducedWord::restricted_to(LetterSet keep) const {
  std::vector<int> out;
  for (int a : letters_) {
    if (keep.contains(a)) out.push_back(a);
  }
  return out;
}

int ReducedWord::position_of(int letter) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == letter) return static_cast<int>(i);
  }
  return -1;
}

namespace {

void collect_words(const Permutation& w, std::vector<int>& prefix,
                   std::vector<ReducedWord>& out, const WordLimits& limits) {
  if (w.is_identity()) {
    if (out.size() >= limits.max_count) {
      throw CapExceeded("reduced-word count exceeds cap of " +
                        std::to_string(limits.max_count));
    }
    out.emplace_back(w.degree(), prefix);
    return;
  }
  // Left descents in increasing order give lexicographic output.
  for (int i : descents(w, Side::Left).members()) {
    prefix.push_back(i);
    collect_words(w.simple_times(i), prefix, out, limits);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ReducedWord> enumerate_reduced_words(const Permutation& w,
                                                 const WordLimits& limits) {
  if (w.length() > limits.max_length) {
    throw CapExceeded("length " + std::to_string(w.length()) +
                      " exceeds reduced-word length guard of " +
                      std::to_string(limits.max_length));
  }
  std::vector<ReducedWord> out;
  std::vector<int> prefix;
  collect_words(w, prefix, out, limits);
  return out;
}

ReducedWord canonical_reduced_word(const Permutation& w) {
  std::vector<int> letters;
  Permutation x = w;
  while (!x.is_identity()) {
    const int i = descents(x, Side::Left).min();
    letters.push_back(i);
    x = x.simple_times(i);
  }
  return ReducedWord(w.degree(), std::move(letters));
}

bool is_boolean_by_words(const Permutation& w, const WordLimits& limits) {
  for (const auto& s : enumerate_reduced_words(w, limits)) {
    std::uint32_t seen = 0;
    for (int a : s.letters()) {
      if ((seen >> a) & 1u) return false;
      seen |= 1u << a;
    }
  }
  return true;
}

SupportSet support_by_words(const Permutation& w, const WordLimits& limits) {
  SupportSet s;
  for (const auto& word : enumerate_reduced_words(w, limits)) {
    for (int a : word.letters()) s.insert(a);
  }
  return s;
}

// ---------------------------------------------------------------- text I/O

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view tok) {
  tok = trim(tok);
  if (tok.size() >= 2 && tok.front() == '(' && tok.back() == ')') {
    tok = trim(tok.substr(1, tok.size() - 2));
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InvalidArgument("cannot parse integer from '" + std::string(tok) +
                          "'");
  }
  return value;
}

// "5123678(12)49(10)(11)" -> 5,1,2,3,6,7,8,12,4,9,10,11
std::vector<int> parse_compact(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      const auto close = text.find(')', i);
      if (close == std::string_view::npos) {
        throw InvalidArgument("unbalanced parenthesis in '" +
                              std::string(text) + "'");
      }
      out.push_back(parse_int(text.substr(i + 1, close - i - 1)));
      i = close + 1;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      out.push_back(c - '0');
      ++i;
    } else {
      throw InvalidArgument("unexpected character '" + std::string(1, c) +
                            "' in '" + std::string(text) + "'");
    }
  }
  return out;
}

std::string_view strip_brackets(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      images.push_back(parse_int(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    images = parse_compact(text);
  }
  return Permutation(images);
}

std::string to_string(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.degree(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(w(i));
  }
  return out;
}

std::string to_compact_string(const Permutation& w) {
  std::string out;
  for (int i = 1; i <= w.degree(); ++i) {
    const int v = w(i);
    out += v >= 10 ? "(" + std::to_string(v) + ")" : std::to_string(v);
  }
  return out;
}

std::vector<int> parse_letters(std::string_view text) {
  text = strip_brackets(text);
  std::vector<int> letters;
  // Spaces or commas separate letters; otherwise the compact form.
  std::string spaced(text);
  bool has_space = false;
  for (char& c : spaced) {
    if (c == ',') c = ' ';
    if (std::isspace(static_cast<unsigned char>(c))) has_space = true;
  }
  if (has_space) {
    std::istringstream in{spaced};
    std::string tok;
    while (in >> tok) letters.push_back(parse_int(tok));
  } else {
    letters = parse_compact(text);
  }
  return letters;
}

ReducedWord parse_reduced_word(int degree, std::string_view text) {
  return ReducedWord(degree, parse_letters(text));
}

std::string to_string(const ReducedWord& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(s[i]);
  }
  return out;
}

std::string compact_letters(std::span<const int> letters) {
  std::string out;
  for (int a : letters) {
    out += a >= 10 ? "(" + std::to_string(a) + ")" : std::to_string(a);
  }
  return out;
}

std::string to_compact_string(const ReducedWord& s) {
  return "[" + compact_letters(s.letters()) + "]";
}

}  // namespace boolgrade
