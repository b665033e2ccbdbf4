#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace dcpm::ett {

// One arc of an Euler tour, kept in a splay tree ordered by tour position.
// A node carries the tour endpoints (loop arc iff end_a == end_b) and the
// difference-encoded value d_rep: the represented value of a node is the sum
// of d_rep over the node and its splay-tree ancestors. For loop arcs that
// value is the id of the tree's representative; for ordinary arcs it is 0
// and ignored.
struct EtNode {
  EtNode* parent = nullptr;
  EtNode* left = nullptr;
  EtNode* right = nullptr;
  std::int64_t d_rep = 0;
  std::int64_t end_a = 0;
  std::int64_t end_b = 0;

  bool is_loop() const { return end_a == end_b; }
};

// Loop arc (id,id); its represented value starts as its own id.
std::unique_ptr<EtNode> make_loop(std::int64_t id);
// Ordinary arc (a,b) with represented value 0.
std::unique_ptr<EtNode> make_arc(std::int64_t a, std::int64_t b);

// Splays x to the root of its tree. Represented values are preserved.
void splay(EtNode* x);

// True iff both arcs live in the same tour. Splays.
bool connected(EtNode* a, EtNode* b);

// Concatenates the tours of the loop arcs a and b as
//   tour(a) ++ arc_ab ++ tour(b) ++ arc_ba
// after rotating each tour to start at its loop arc. The arc nodes must be
// fresh detached singletons. Throws if a and b are already connected.
void link(EtNode* a, EtNode* b, EtNode* arc_ab, EtNode* arc_ba);

// Removes the two arcs of one spanning-tree edge, splitting the tour in two.
// Both arcs are left as detached singletons for the caller to destroy.
// Throws if the arcs do not belong to the same tour.
void cut(EtNode* arc_ab, EtNode* arc_ba);

// Adds alpha to the represented value of every node in x's tree.
void add_value(EtNode* x, std::int64_t alpha);

// Represented value of x (splays x).
std::int64_t value(EtNode* x);

// Direct ancestor-sum evaluation; no rebalancing. Used by queries that must
// not mutate and by tests of the difference encoding.
std::int64_t ancestor_sum_value(const EtNode* x);

const EtNode* tree_root(const EtNode* x);  // parent walk, no splay

// In-order arc sequence of x's tree, without splaying.
std::vector<const EtNode*> in_order_arcs(const EtNode* x);

// Loop arcs of x's tree, in tour order. Splays x once.
std::vector<EtNode*> collect_loops(EtNode* x);

std::size_t tree_size(const EtNode* x);  // total arc count of x's tree

}  // namespace dcpm::ett
