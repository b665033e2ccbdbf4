#include "dcpm/euler_tour_tree.hpp"

#include <cassert>
#include <stdexcept>

namespace dcpm::ett {

std::unique_ptr<EtNode> make_loop(std::int64_t id) {
  auto n = std::make_unique<EtNode>();
  n->end_a = n->end_b = id;
  n->d_rep = id;
  return n;
}

std::unique_ptr<EtNode> make_arc(std::int64_t a, std::int64_t b) {
  assert(a != b);
  auto n = std::make_unique<EtNode>();
  n->end_a = a;
  n->end_b = b;
  n->d_rep = 0;
  return n;
}

namespace {

// Rotates x above its parent. The difference values are re-expressed against
// the new parents so that every node's represented value is unchanged.
void rotate_up(EtNode* x) {
  EtNode* p = x->parent;
  EtNode* g = p->parent;
  const std::int64_t dx = x->d_rep;
  const std::int64_t dp = p->d_rep;
  x->d_rep = dx + dp;
  p->d_rep = -dx;

  EtNode* moved;
  if (p->left == x) {
    moved = x->right;
    p->left = moved;
    x->right = p;
  } else {
    assert(p->right == x);
    moved = x->left;
    p->right = moved;
    x->left = p;
  }
  if (moved) {
    moved->parent = p;
    moved->d_rep += dx;
  }
  p->parent = x;
  x->parent = g;
  if (g) {
    if (g->left == p)
      g->left = x;
    else
      g->right = x;
  }
}

// Detaches x's left subtree and returns its root with the difference value
// restored to an absolute one. x must be a root.
EtNode* detach_left(EtNode* x) {
  EtNode* l = x->left;
  if (!l) return nullptr;
  x->left = nullptr;
  l->parent = nullptr;
  l->d_rep += x->d_rep;
  return l;
}

EtNode* detach_right(EtNode* x) {
  EtNode* r = x->right;
  if (!r) return nullptr;
  x->right = nullptr;
  r->parent = nullptr;
  r->d_rep += x->d_rep;
  return r;
}

// Concatenates two tours (both arguments must be roots or null).
EtNode* join(EtNode* l, EtNode* r) {
  if (!l) return r;
  if (!r) return l;
  EtNode* m = l;
  while (m->right) m = m->right;
  splay(m);
  m->right = r;
  r->parent = m;
  r->d_rep -= m->d_rep;
  return m;
}

// Rotates x's tour so that x becomes its first arc; returns the tree root.
EtNode* reroot(EtNode* x) {
  splay(x);
  EtNode* l = detach_left(x);
  if (!l) return x;
  return join(x, l);
}

}  // namespace

void splay(EtNode* x) {
  assert(x);
  while (x->parent) {
    EtNode* p = x->parent;
    EtNode* g = p->parent;
    if (!g) {
      rotate_up(x);
    } else if ((g->left == p) == (p->left == x)) {
      rotate_up(p);  // zig-zig
      rotate_up(x);
    } else {
      rotate_up(x);  // zig-zag
      rotate_up(x);
    }
  }
}

bool connected(EtNode* a, EtNode* b) {
  assert(a && b);
  if (a == b) return true;
  splay(a);
  splay(b);
  return a->parent != nullptr;
}

void link(EtNode* a, EtNode* b, EtNode* arc_ab, EtNode* arc_ba) {
  assert(a->is_loop() && b->is_loop());
  assert(!arc_ab->is_loop() && !arc_ba->is_loop());
  assert(!arc_ab->parent && !arc_ab->left && !arc_ab->right);
  assert(!arc_ba->parent && !arc_ba->left && !arc_ba->right);
  if (connected(a, b))
    throw std::invalid_argument("ett::link: endpoints are already in one tree");
  EtNode* ta = reroot(a);
  EtNode* tb = reroot(b);
  EtNode* t = join(ta, arc_ab);
  t = join(t, tb);
  join(t, arc_ba);
}

void cut(EtNode* arc_ab, EtNode* arc_ba) {
  assert(!arc_ab->is_loop() && !arc_ba->is_loop());
  if (arc_ab == arc_ba || !connected(arc_ab, arc_ba))
    throw std::invalid_argument("ett::cut: arcs do not form one tree edge");

  // Rotate the tour to start at arc_ab; the segment strictly between the two
  // arcs is then exactly the tour of the subtree being split off.
  reroot(arc_ab);
  splay(arc_ab);
  assert(arc_ab->left == nullptr);
  EtNode* rest = detach_right(arc_ab);
  arc_ab->d_rep = 0;
  assert(rest != nullptr);
  (void)rest;

  splay(arc_ba);
  EtNode* inner = detach_left(arc_ba);
  EtNode* outer = detach_right(arc_ba);
  arc_ba->d_rep = 0;
  assert(inner != nullptr && outer != nullptr);
  (void)inner;
  (void)outer;
}

void add_value(EtNode* x, std::int64_t alpha) {
  splay(x);
  x->d_rep += alpha;
}

std::int64_t value(EtNode* x) {
  splay(x);
  return x->d_rep;
}

std::int64_t ancestor_sum_value(const EtNode* x) {
  std::int64_t sum = 0;
  for (const EtNode* p = x; p; p = p->parent) sum += p->d_rep;
  return sum;
}

const EtNode* tree_root(const EtNode* x) {
  const EtNode* r = x;
  while (r->parent) r = r->parent;
  return r;
}

std::vector<const EtNode*> in_order_arcs(const EtNode* x) {
  std::vector<const EtNode*> out;
  // Iterative in-order walk from the root.
  std::vector<std::pair<const EtNode*, bool>> stack{{tree_root(x), false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (!n) continue;
    if (expanded) {
      out.push_back(n);
    } else {
      stack.emplace_back(n->right, false);
      stack.emplace_back(n, true);
      stack.emplace_back(n->left, false);
    }
  }
  return out;
}

std::vector<EtNode*> collect_loops(EtNode* x) {
  splay(x);
  std::vector<EtNode*> out;
  for (const EtNode* arc : in_order_arcs(x))
    if (arc->is_loop()) out.push_back(const_cast<EtNode*>(arc));
  return out;
}

std::size_t tree_size(const EtNode* x) { return in_order_arcs(x).size(); }

}  // namespace dcpm::ett
