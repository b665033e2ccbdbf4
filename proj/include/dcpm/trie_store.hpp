#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcpm/graph.hpp"

namespace dcpm {

using McId = std::int64_t;
constexpr McId kNoMc = -1;

// Sorted vertex list of a maximal clique.
using Clique = std::vector<VertexId>;

struct TrieNode {
  VertexId key = 0;
  McId value = kNoMc;  // clique id at a leaf, -1 elsewhere
  TrieNode* parent = nullptr;
  std::map<VertexId, std::unique_ptr<TrieNode>> children;
  TrieNode* next = nullptr;  // same-vertex chain, see Trie::node_list_head
};

// Stores the maximal cliques whose minimum vertex is the root key, one
// root-to-leaf path per clique; shared prefixes are stored once. Keys
// strictly increase along every path.
class Trie {
 public:
  explicit Trie(VertexId root_key);

  VertexId root_key() const { return root_->key; }
  const TrieNode* root() const { return root_.get(); }
  TrieNode* root() { return root_.get(); }

  // Adds the clique (sorted, starting at the root key); returns its leaf.
  // Throws on a duplicate or on a clique nested with a stored one.
  TrieNode* add(const Clique& m, McId id);

  // Stored id of the clique, or -1 when the path is absent or not a leaf.
  McId get_id(const Clique& m) const;

  // Removes the clique's path, pruning now-childless nodes. Throws when the
  // clique is not stored.
  void remove(const Clique& m);

  bool empty() const;
  std::size_t clique_count() const { return clique_count_; }
  std::size_t node_count() const { return node_count_; }

  // Head of the linked list of trie nodes representing vertex v (a vertex
  // can appear on several branches). Null when v does not occur.
  TrieNode* node_list_head(VertexId v) const;

  // All (id, clique) pairs whose root-to-leaf path passes through x. The
  // prefix above x is assembled once, then the branches below are walked.
  std::vector<std::pair<McId, Clique>> paths_through(const TrieNode* x) const;

 private:
  std::unique_ptr<TrieNode> root_;
  std::unordered_map<VertexId, TrieNode*> node_list_;
  std::size_t clique_count_ = 0;
  std::size_t node_count_ = 0;

  TrieNode* find(const Clique& m) const;
  void register_node(TrieNode* n);
  void unregister_node(TrieNode* n);
};

// The per-root-vertex collection of tries, plus an id -> leaf index so a
// clique's vertices can be recovered from its id.
class TrieTable {
 public:
  // Creates the root trie on demand. Throws on duplicates.
  void add_clique(const Clique& m, McId id);
  // -1 when absent.
  McId get_id(const Clique& m) const;
  // Throws when absent. Empty tries are dropped from the table.
  void remove_clique(const Clique& m);

  bool contains(McId id) const { return leaf_index_.count(id) != 0; }
  Clique clique_of(McId id) const;  // throws for an unknown id
  std::size_t clique_count() const { return leaf_index_.size(); }

  const Trie* trie_for(VertexId root) const;
  Trie* trie_for(VertexId root);
  const std::map<VertexId, Trie>& tries() const { return tries_; }

  // Neighboring cliques of m (id m_id): every stored clique sharing at least
  // one vertex with m, keyed by id, m itself excluded. Cliques rooted inside
  // m are read off whole tries; the rest are reached through the node lists
  // of m's members in the tries of their lower neighbors.
  std::map<McId, Clique> neighbor_mcs(const Graph& g, const Clique& m, McId m_id) const;

 private:
  std::map<VertexId, Trie> tries_;
  std::unordered_map<McId, TrieNode*> leaf_index_;
};

}  // namespace dcpm
