// Copyright 2026 The mcgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MCGRAPH_FAMILY_G_HPP_
#define MCGRAPH_FAMILY_G_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcgraph/canonical.hpp"
#include "mcgraph/multigraph.hpp"
#include "mcgraph/splice.hpp"

namespace mcg {

// A leaf is a wheel. A node splices the graph built by `left` at u with the
// wheel at v under theta (see Splice).
struct GCertificate {
  WheelSpec wheel;
  std::shared_ptr<const GCertificate> left;
  VertexId u = -1;
  VertexId v = -1;
  std::vector<int> theta;

  bool is_leaf() const { return left == nullptr; }
  int level() const { return is_leaf() ? 1 : left->level() + 1; }
};

GCertificate LeafCertificate(const WheelSpec& wheel);
GCertificate NodeCertificate(const GCertificate& left, const WheelSpec& wheel,
                             VertexId u, VertexId v, std::vector<int> theta);

// Composes the splices bottom-up. Throws kBadSpec, kDegreeMismatch,
// kNotABijection, kVertexOutOfRange.
Multigraph BuildFromCertificate(const GCertificate& cert);

inline constexpr int kLeafCondition = 0;
inline constexpr int kSizeCondition = 3;

struct CertificateReport {
  bool valid = true;
  int level = 0;      // level of the failing node, 1 for the bottom leaf
  int condition = 0;  // kLeafCondition, 1, 2, kSizeCondition or
                      // kOrientationCondition
  std::string reason;
};

inline constexpr int kOrientationCondition = 4;

// Leaf validity (odd wheel, wheel-like), conditions 1 and 2 at every node,
// the eight-vertex clause, and with large_left_first a left operand of at
// least six vertices at the first splice.
CertificateReport CheckCertificate(const GCertificate& cert,
                                   bool large_left_first = true);
// Throws kConditionViolated carrying the level and condition.
void VerifyCertificate(const GCertificate& cert, bool large_left_first = true);

// Leaf {"k", "mults"}; node {"left", "right", "u", "v", "theta"} where
// "right" is a leaf object.
nlohmann::ordered_json CertificateToJson(const GCertificate& cert);
// Throws kParseError.
GCertificate CertificateFromJson(const nlohmann::json& j);

struct ClosureOptions {
  int max_n = 8;
  int leaf_mult = 2;  // spoke multiplicity bound for leaf wheels
  int max_mult = 2;   // edge multiplicity bound for spliced members
  // At the first splice the left operand must have at least six vertices.
  // False admits a four-vertex left operand as well.
  bool large_left_first = true;
};

struct ClosureEntry {
  CanonicalForm form;
  Multigraph graph;
  std::shared_ptr<const GCertificate> cert;
  int level = 1;
};

// Forward closure: every member of the family with at most max_n vertices
// reachable from leaves within the multiplicity bounds, one certificate per
// isomorphism class and level. Work items run in parallel; the merge
// follows work-item order so results do not depend on scheduling.
class GClosure {
 public:
  explicit GClosure(const ClosureOptions& options);

  const ClosureOptions& options() const { return options_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }
  const std::vector<ClosureEntry>& level(int j) const { return levels_[j - 1]; }
  // Distinct isomorphism classes over all levels, lowest level first.
  std::vector<const ClosureEntry*> members() const;
  const ClosureEntry* Find(const Multigraph& g) const;

 private:
  ClosureOptions options_;
  std::vector<std::vector<ClosureEntry>> levels_;
  std::map<CanonicalForm, std::pair<int, int>> index_;
};

inline constexpr int kClosureVertexBound = 12;

// Certificate for a brick isomorphic to g, from a closure over |V(g)|
// vertices. Throws kNotABrick, kBoundExceeded.
std::optional<GCertificate> SearchGCertificate(const Multigraph& g,
                                               int leaf_mult = 2,
                                               int max_mult = 2,
                                               bool large_left_first = true);

}  // namespace mcg

#endif  // MCGRAPH_FAMILY_G_HPP_
