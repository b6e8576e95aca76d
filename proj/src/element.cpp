#include "subm/element.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "subm/util.hpp"

namespace subm {

namespace {

bool is_prefix(const std::string& p, const std::string& s) {
  return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}

void check_node(const std::string& s) {
  for (char c : s) {
    if (c != '0' && c != '1') throw InputError("cantor node must be a binary string: " + s);
  }
}

}  // namespace

Element Element::finite(unsigned atom_count, std::uint32_t mask) {
  if (atom_count < 1 || atom_count > 24) throw InputError("finite algebra needs 1..24 atoms");
  if (atom_count < 32 && mask >= (std::uint32_t{1} << atom_count))
    throw InputError("mask out of range for atom count");
  Element e;
  e.backend_ = Backend::Finite;
  e.atoms_ = static_cast<std::uint8_t>(atom_count);
  e.mask_ = mask;
  return e;
}

Element Element::cantor(std::vector<std::string> nodes) {
  for (const auto& s : nodes) check_node(s);
  Element e;
  e.backend_ = Backend::Cantor;
  e.nodes_ = canonical_nodes(std::move(nodes));
  return e;
}

bool Element::is_zero() const {
  return backend_ == Backend::Finite ? mask_ == 0 : nodes_.empty();
}

bool Element::is_one() const {
  if (backend_ == Backend::Finite)
    return mask_ == ((atoms_ >= 32 ? 0 : (std::uint32_t{1} << atoms_)) - 1) && atoms_ > 0;
  return nodes_.size() == 1 && nodes_[0].empty();
}

bool operator<(const Element& a, const Element& b) {
  if (a.backend_ != b.backend_) return a.backend_ < b.backend_;
  if (a.backend_ == Backend::Finite) {
    if (a.atoms_ != b.atoms_) return a.atoms_ < b.atoms_;
    return a.mask_ < b.mask_;
  }
  return a.nodes_ < b.nodes_;
}

void require_same_algebra(const Element& a, const Element& b) {
  if (a.backend() != b.backend())
    throw InputError("mixed-backend operands");
  if (a.backend() == Backend::Finite && a.atom_count() != b.atom_count())
    throw InputError("operands from finite algebras of different size");
}

std::vector<std::string> canonical_nodes(std::vector<std::string> nodes) {
  std::set<std::string> s(nodes.begin(), nodes.end());
  // drop strict descendants of present nodes
  for (auto it = s.begin(); it != s.end();) {
    bool covered = false;
    for (const auto& p : s) {
      if (&p != &*it && is_prefix(p, *it)) {
        covered = true;
        break;
      }
    }
    it = covered ? s.erase(it) : ++it;
  }
  // merge complete sibling pairs bottom-up until fixpoint
  bool merged = true;
  while (merged) {
    merged = false;
    for (auto it = s.begin(); it != s.end(); ++it) {
      const std::string& n = *it;
      if (n.empty() || n.back() != '0') continue;
      std::string sib = n;
      sib.back() = '1';
      if (s.count(sib)) {
        std::string parent = n.substr(0, n.size() - 1);
        s.erase(sib);
        s.erase(n);
        s.insert(parent);
        merged = true;
        break;
      }
    }
  }
  return {s.begin(), s.end()};
}

namespace {

// Nodes of the complement, recursing on the (implicit) trie of a canonical set.
// At path p, the slice holds the nodes of the set that have p as a prefix.
void complement_rec(const std::vector<std::string>& nodes, std::size_t lo, std::size_t hi,
                    std::string& path, std::vector<std::string>& out) {
  if (lo == hi) {
    out.push_back(path);
    return;
  }
  if (hi - lo == 1 && nodes[lo] == path) return;  // whole cylinder present
  auto mid = lo;
  while (mid < hi && nodes[mid][path.size()] == '0') ++mid;
  path.push_back('0');
  complement_rec(nodes, lo, mid, path, out);
  path.back() = '1';
  complement_rec(nodes, mid, hi, path, out);
  path.pop_back();
}

}  // namespace

Element join(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.backend() == Backend::Finite)
    return Element::finite(a.atom_count(), a.mask() | b.mask());
  std::vector<std::string> all = a.nodes();
  all.insert(all.end(), b.nodes().begin(), b.nodes().end());
  return Element::cantor(std::move(all));
}

Element meet(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.backend() == Backend::Finite)
    return Element::finite(a.atom_count(), a.mask() & b.mask());
  // [s] and [t] intersect iff one is a prefix of the other; the meet is the deeper node
  std::vector<std::string> out;
  for (const auto& s : a.nodes()) {
    for (const auto& t : b.nodes()) {
      if (is_prefix(s, t))
        out.push_back(t);
      else if (is_prefix(t, s))
        out.push_back(s);
    }
  }
  return Element::cantor(std::move(out));
}

Element complement(const Element& a) {
  if (a.backend() == Backend::Finite) {
    std::uint32_t full = (std::uint32_t{1} << a.atom_count()) - 1;
    return Element::finite(a.atom_count(), full & ~a.mask());
  }
  std::vector<std::string> out;
  std::string path;
  complement_rec(a.nodes(), 0, a.nodes().size(), path, out);
  return Element::cantor(std::move(out));
}

Element symdiff(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.backend() == Backend::Finite)
    return Element::finite(a.atom_count(), a.mask() ^ b.mask());
  return join(meet(a, complement(b)), meet(b, complement(a)));
}

bool leq(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  if (a.backend() == Backend::Finite) return (a.mask() & b.mask()) == a.mask();
  // canonical b: [s] subset of the union iff some node of b is a prefix of s
  for (const auto& s : a.nodes()) {
    bool covered = false;
    for (const auto& t : b.nodes()) {
      if (is_prefix(t, s)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<Element> atoms_below(const Element& a) {
  std::vector<Element> out;
  if (a.backend() == Backend::Finite) {
    std::uint32_t m = a.mask();
    while (m) {
      std::uint32_t low = m & (~m + 1);
      out.push_back(Element::finite(a.atom_count(), low));
      m &= m - 1;
    }
    return out;
  }
  for (const auto& s : a.nodes()) out.push_back(Element::cantor({s}));
  return out;
}

std::string to_string(const Element& a) {
  if (a.backend() == Backend::Finite) {
    std::ostringstream os;
    os << "0x" << std::hex << a.mask();
    return os.str();
  }
  std::string s = "{";
  for (std::size_t i = 0; i < a.nodes().size(); ++i) {
    if (i) s += ",";
    s += a.nodes()[i].empty() ? "e" : a.nodes()[i];
  }
  return s + "}";
}

}  // namespace subm
