#include "dcpm/trie_store.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace dcpm {

namespace {

std::string clique_str(const Clique& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(m[i]);
  }
  return s + "}";
}

void check_sorted(const Clique& m) {
  if (m.empty()) throw std::invalid_argument("empty clique");
  if (!std::is_sorted(m.begin(), m.end()) ||
      std::adjacent_find(m.begin(), m.end()) != m.end())
    throw std::invalid_argument("clique vertices must be sorted and distinct");
}

}  // namespace

Trie::Trie(VertexId root_key) : root_(std::make_unique<TrieNode>()) {
  root_->key = root_key;
  node_count_ = 1;
  node_list_[root_key] = root_.get();
}

void Trie::register_node(TrieNode* n) {
  TrieNode*& head = node_list_[n->key];
  n->next = head;
  head = n;
  ++node_count_;
}

void Trie::unregister_node(TrieNode* n) {
  auto it = node_list_.find(n->key);
  assert(it != node_list_.end());
  TrieNode** link = &it->second;
  while (*link && *link != n) link = &(*link)->next;
  assert(*link == n);
  *link = n->next;
  n->next = nullptr;
  if (!it->second) node_list_.erase(it);
  --node_count_;
}

TrieNode* Trie::add(const Clique& m, McId id) {
  check_sorted(m);
  if (id < 0) throw std::invalid_argument("clique id must be non-negative");
  if (m.front() != root_->key)
    throw std::invalid_argument("clique does not start at this trie's root");
  TrieNode* node = root_.get();
  for (std::size_t i = 1; i < m.size(); ++i) {
    auto it = node->children.find(m[i]);
    if (it == node->children.end()) {
      auto child = std::make_unique<TrieNode>();
      child->key = m[i];
      child->parent = node;
      TrieNode* raw = child.get();
      node->children.emplace(m[i], std::move(child));
      register_node(raw);
      node = raw;
    } else {
      node = it->second.get();
    }
  }
  if (node->value >= 0)
    throw std::invalid_argument("duplicate clique " + clique_str(m));
  if (!node->children.empty())
    throw std::invalid_argument("clique " + clique_str(m) +
                                " is a prefix of a stored clique");
  node->value = id;
  ++clique_count_;
  return node;
}

TrieNode* Trie::find(const Clique& m) const {
  if (m.empty() || m.front() != root_->key) return nullptr;
  TrieNode* node = root_.get();
  for (std::size_t i = 1; i < m.size(); ++i) {
    auto it = node->children.find(m[i]);
    if (it == node->children.end()) return nullptr;
    node = it->second.get();
  }
  return node;
}

McId Trie::get_id(const Clique& m) const {
  const TrieNode* node = find(m);
  return node ? node->value : kNoMc;
}

void Trie::remove(const Clique& m) {
  check_sorted(m);
  TrieNode* node = find(m);
  if (!node || node->value < 0)
    throw std::invalid_argument("clique " + clique_str(m) + " is not stored");
  node->value = kNoMc;
  --clique_count_;
  while (node != root_.get() && node->children.empty() && node->value < 0) {
    TrieNode* parent = node->parent;
    unregister_node(node);
    parent->children.erase(node->key);
    node = parent;
  }
}

bool Trie::empty() const { return clique_count_ == 0; }

TrieNode* Trie::node_list_head(VertexId v) const {
  auto it = node_list_.find(v);
  return it == node_list_.end() ? nullptr : it->second;
}

std::vector<std::pair<McId, Clique>> Trie::paths_through(const TrieNode* x) const {
  Clique prefix;
  for (const TrieNode* p = x; p; p = p->parent) prefix.push_back(p->key);
  std::reverse(prefix.begin(), prefix.end());

  std::vector<std::pair<McId, Clique>> out;
  // Walk the branches below x, extending the shared prefix.
  struct Frame {
    const TrieNode* node;
    std::size_t depth;  // prefix length when this node was entered
  };
  std::vector<Frame> stack{{x, prefix.size()}};
  Clique path = prefix;
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    path.resize(depth);
    if (node != x) path.push_back(node->key);
    if (node->children.empty()) {
      assert(node->value >= 0);
      out.emplace_back(node->value, path);
    } else {
      for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
        stack.push_back({it->second.get(), path.size()});
    }
  }
  return out;
}

void TrieTable::add_clique(const Clique& m, McId id) {
  check_sorted(m);
  if (leaf_index_.count(id))
    throw std::invalid_argument("clique id " + std::to_string(id) + " already in use");
  auto [it, _] = tries_.try_emplace(m.front(), m.front());
  TrieNode* leaf = it->second.add(m, id);
  leaf_index_.emplace(id, leaf);
}

McId TrieTable::get_id(const Clique& m) const {
  if (m.empty()) return kNoMc;
  auto it = tries_.find(m.front());
  if (it == tries_.end()) return kNoMc;
  return it->second.get_id(m);
}

void TrieTable::remove_clique(const Clique& m) {
  check_sorted(m);
  auto it = tries_.find(m.front());
  if (it == tries_.end())
    throw std::invalid_argument("clique " + clique_str(m) + " is not stored");
  McId id = it->second.get_id(m);
  it->second.remove(m);  // throws when absent
  leaf_index_.erase(id);
  if (it->second.empty()) tries_.erase(it);
}

Clique TrieTable::clique_of(McId id) const {
  auto it = leaf_index_.find(id);
  if (it == leaf_index_.end())
    throw std::out_of_range("unknown clique id " + std::to_string(id));
  Clique m;
  for (const TrieNode* p = it->second; p; p = p->parent) m.push_back(p->key);
  std::reverse(m.begin(), m.end());
  return m;
}

const Trie* TrieTable::trie_for(VertexId root) const {
  auto it = tries_.find(root);
  return it == tries_.end() ? nullptr : &it->second;
}

Trie* TrieTable::trie_for(VertexId root) {
  auto it = tries_.find(root);
  return it == tries_.end() ? nullptr : &it->second;
}

std::map<McId, Clique> TrieTable::neighbor_mcs(const Graph& g, const Clique& m,
                                               McId m_id) const {
  std::map<McId, Clique> out;
  // Cliques rooted at a member of m.
  for (VertexId u : m) {
    const Trie* t = trie_for(u);
    if (!t) continue;
    for (auto& [id, clique] : t->paths_through(t->root()))
      out.emplace(id, std::move(clique));
  }
  out.erase(m_id);

  // Cliques rooted below m's members: for each v_j in m, scan the tries of
  // v_j's lower neighbors (skipping members of m, whose tries were already
  // emitted whole) and emit every path through a node representing v_j.
  for (std::size_t j = 0; j < m.size(); ++j) {
    const VertexId vj = m[j];
    for (VertexId u : lower_neighbors(g, vj)) {
      if (std::binary_search(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(j), u))
        continue;
      const Trie* t = trie_for(u);
      if (!t) continue;
      for (TrieNode* x = t->node_list_head(vj); x; x = x->next)
        for (auto& [id, clique] : t->paths_through(x))
          out.emplace(id, std::move(clique));
    }
  }
  return out;
}

}  // namespace dcpm
