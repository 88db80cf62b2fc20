#include "trikit/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "trikit/errors.hpp"
#include "trikit/smith.hpp"

namespace trikit {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l = -l;
  return out;
}

bool GroupPresentation::valid() const {
  for (const Word& r : relators) {
    for (Letter l : r)
      if (l == 0 || generator_of(l) >= generators) return false;
    if (free_reduce(r) != r) return false;
  }
  return true;
}

namespace {

void append_word(std::ostringstream& out, const Word& w) {
  if (w.empty()) {
    out << "1";
    return;
  }
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i > 0) out << ' ';
    out << 'x' << generator_of(w[i]) + 1;
    long e = static_cast<long>(j - i) * (w[i] < 0 ? -1 : 1);
    if (e != 1) out << '^' << e;
    i = j;
  }
}

}  // namespace

std::string GroupPresentation::to_string() const {
  std::ostringstream out;
  out << "⟨";
  for (std::size_t g = 0; g < generators; ++g) out << (g ? ", " : "") << 'x' << g + 1;
  out << " | ";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (r) out << ", ";
    append_word(out, relators[r]);
  }
  out << "⟩";
  return out.str();
}

// ------------------------------------------------------------ text parsing

namespace {

class RelatorParser {
 public:
  RelatorParser(const std::map<std::string, std::size_t>& names, std::string text)
      : names_(names), text_(std::move(text)) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  Word sequence() {
    Word w;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      Word atom;
      if (text_[pos_] == '(') {
        ++pos_;
        atom = sequence();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
          ++pos_;
        if (start == pos_) fail("expected a generator");
        auto it = names_.find(text_.substr(start, pos_ - start));
        if (it == names_.end()) fail("unknown generator '" + text_.substr(start, pos_ - start) + "'");
        atom = {letter(it->second)};
      }
      long e = exponent();
      Word piece = e < 0 ? inverse(atom) : atom;
      for (long i = 0; i < std::labs(e); ++i) w.insert(w.end(), piece.begin(), piece.end());
    }
  }

  long exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || text_.substr(start, pos_ - start) == "-") fail("malformed exponent");
    return std::stol(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, "relator '" + text_ + "': " + what);
  }

  const std::map<std::string, std::size_t>& names_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupPresentation parse_presentation(const std::vector<std::string>& generators,
                                     const std::vector<std::string>& relators) {
  std::map<std::string, std::size_t> names;
  for (const auto& g : generators)
    if (!names.emplace(g, names.size()).second)
      throw Error(ErrorKind::parse, "repeated generator '" + g + "'");
  GroupPresentation p;
  p.generators = generators.size();
  for (const auto& r : relators) {
    Word w = free_reduce(RelatorParser(names, r).parse());
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

// ------------------------------------------------------------- edge paths

GroupPresentation edge_path_presentation(const SimplicialComplex& k,
                                         const PresentationOptions& options) {
  if (k.is_empty()) throw Error(ErrorKind::connectivity, "empty complex has no fundamental group");
  if (!is_connected(k)) throw Error(ErrorKind::connectivity, "complex is disconnected");

  const VertexSet& verts = k.vertices();
  std::map<VertexId, std::vector<VertexId>> adjacency;
  const std::vector<Simplex> no_edges;
  const auto& edges = k.dim() >= 1 ? k.faces(1) : no_edges;
  for (const Simplex& e : edges) {
    adjacency[e[0]].push_back(e[1]);
    adjacency[e[1]].push_back(e[0]);
  }
  for (auto& [v, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());

  VertexId root = verts.front();
  std::mt19937_64 rng(options.tree_seed.value_or(0));
  if (options.tree_seed) root = verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)];

  std::set<std::pair<VertexId, VertexId>> tree;
  std::set<VertexId> seen{root};
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    std::vector<VertexId> nbrs = adjacency[v];
    if (options.tree_seed) std::shuffle(nbrs.begin(), nbrs.end(), rng);
    for (VertexId w : nbrs) {
      if (!seen.insert(w).second) continue;
      tree.emplace(std::min(v, w), std::max(v, w));
      queue.push_back(w);
    }
  }

  GroupPresentation p;
  p.tree_edges.assign(tree.begin(), tree.end());
  std::map<std::pair<VertexId, VertexId>, std::size_t> generator_of_edge;
  for (const Simplex& e : edges) {
    auto key = std::make_pair(e[0], e[1]);
    if (tree.count(key)) continue;
    generator_of_edge.emplace(key, p.generators++);
    p.generator_edges.push_back(key);
  }

  auto walk = [&](VertexId a, VertexId b, Word& w) {
    auto it = generator_of_edge.find({std::min(a, b), std::max(a, b)});
    if (it != generator_of_edge.end()) w.push_back(letter(it->second, a > b));
  };
  if (k.dim() >= 2) {
    for (const Simplex& t : k.faces(2)) {
      Word w;
      walk(t[0], t[1], w);
      walk(t[1], t[2], w);
      walk(t[2], t[0], w);
      w = cyclic_reduce(w);
      if (!w.empty()) p.relators.push_back(std::move(w));
    }
  }
  return p;
}

// ------------------------------------------------------------------ Tietze

namespace {

// Canonical representative of a relator up to rotation and inversion.
Word canonical(const Word& w) {
  Word best = w;
  for (const Word& base : {w, inverse(w)}) {
    for (std::size_t s = 0; s < base.size(); ++s) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
      if (rot < best) best = std::move(rot);
    }
  }
  return best;
}

Word substitute(const Word& w, std::size_t g, const Word& value) {
  Word out;
  const Word inv = inverse(value);
  for (Letter l : w) {
    if (generator_of(l) != g) out.push_back(l);
    else if (l > 0) out.insert(out.end(), value.begin(), value.end());
    else out.insert(out.end(), inv.begin(), inv.end());
  }
  return free_reduce(out);
}

class Simplifier {
 public:
  Simplifier(const GroupPresentation& p, std::size_t budget)
      : generators_(p.generators), relators_(p.relators), budget_(budget) {
    alive_.assign(generators_, true);
    images_.resize(generators_);
    for (std::size_t g = 0; g < generators_; ++g) images_[g] = {letter(g)};
  }

  TrackedPresentation run() {
    normalize();
    while (moves_ < budget_ && (kill_single_letters() || eliminate_once())) {
      ++moves_;
      normalize();
    }
    return finish();
  }

 private:
  void normalize() {
    std::set<Word> seen;
    std::vector<Word> kept;
    for (const Word& r : relators_) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      if (seen.insert(canonical(c)).second) kept.push_back(std::move(c));
    }
    relators_ = std::move(kept);
  }

  void eliminate(std::size_t g, const Word& value, std::size_t drop_relator) {
    relators_.erase(relators_.begin() + static_cast<std::ptrdiff_t>(drop_relator));
    for (Word& r : relators_) r = substitute(r, g, value);
    for (Word& img : images_) img = substitute(img, g, value);
    alive_[g] = false;
  }

  bool kill_single_letters() {
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      if (relators_[i].size() != 1) continue;
      eliminate(generator_of(relators_[i][0]), {}, i);
      return true;
    }
    return false;
  }

  // A relator x^e w with x absent from w defines x = w^{-e}. Prefer the
  // elimination that shrinks the presentation most; accept ties.
  bool eliminate_once() {
    std::vector<std::size_t> occurrences(generators_, 0);
    for (const Word& r : relators_)
      for (Letter l : r) ++occurrences[generator_of(l)];

    struct Candidate {
      long delta;
      std::size_t relator;
      std::size_t position;
    };
    std::optional<Candidate> best;
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      const Word& r = relators_[i];
      std::map<std::size_t, std::size_t> count;
      for (Letter l : r) ++count[generator_of(l)];
      for (std::size_t pos = 0; pos < r.size(); ++pos) {
        std::size_t g = generator_of(r[pos]);
        if (count[g] != 1) continue;
        long others = static_cast<long>(occurrences[g]) - 1;
        long value_len = static_cast<long>(r.size()) - 1;
        long delta = others * (value_len - 1) - static_cast<long>(r.size());
        if (delta > 0) continue;
        if (!best || delta < best->delta) best = Candidate{delta, i, pos};
      }
    }
    if (!best) return false;
    const Word& r = relators_[best->relator];
    Word rest(r.begin() + static_cast<std::ptrdiff_t>(best->position) + 1, r.end());
    rest.insert(rest.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(best->position));
    Letter x = r[best->position];
    // x^e rest = 1  ⇒  x^e = rest^{-1}.
    Word value = x > 0 ? inverse(rest) : rest;
    eliminate(generator_of(x), free_reduce(value), best->relator);
    return true;
  }

  TrackedPresentation finish() {
    std::vector<std::size_t> renumber(generators_, 0);
    std::size_t next = 0;
    for (std::size_t g = 0; g < generators_; ++g)
      if (alive_[g]) renumber[g] = next++;
    auto remap = [&](const Word& w) {
      Word out;
      for (Letter l : w) out.push_back(letter(renumber[generator_of(l)], l < 0));
      return out;
    };
    TrackedPresentation t;
    t.presentation.generators = next;
    for (const Word& r : relators_) {
      const auto negative = std::count_if(r.begin(), r.end(), [](Letter l) { return l < 0; });
      t.presentation.relators.push_back(remap(2 * negative > static_cast<long>(r.size()) ? inverse(r) : r));
    }
    for (const Word& img : images_) t.input_generator_images.push_back(remap(img));
    t.moves = moves_;
    return t;
  }

  std::size_t generators_;
  std::vector<Word> relators_;
  std::size_t budget_;
  std::vector<bool> alive_;
  std::vector<Word> images_;
  std::size_t moves_ = 0;
};

}  // namespace

TrackedPresentation tietze_simplify_tracked(const GroupPresentation& p,
                                            std::size_t effort_budget) {
  return Simplifier(p, effort_budget).run();
}

GroupPresentation tietze_simplify(const GroupPresentation& p, std::size_t effort_budget) {
  return tietze_simplify_tracked(p, effort_budget).presentation;
}

Group abelianization(const GroupPresentation& p) {
  Group g;
  if (p.relators.empty()) {
    g.betti = p.generators;
    return g;
  }
  IntMatrix m(p.relators.size(), p.generators);
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (Letter l : p.relators[r]) m(r, generator_of(l)) += l > 0 ? 1 : -1;
  SnfResult snf = smith_normal_form(m);
  g.betti = p.generators - snf.rank();
  g.torsion = snf.torsion();
  return g;
}

}  // namespace trikit
