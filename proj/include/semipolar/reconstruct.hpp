#pragma once

#include "semipolar/complement.hpp"
#include "semipolar/incidence.hpp"

#include <vector>

namespace semipolar {

// Everything in this header except canonical_map reads the complement only
// through its incidence structure (and, for plane horizons, its plane
// records). Ground-truth parallelism never feeds the reconstruction.

/// Partition of the self-parallel lines. Classes are ordered by their
/// smallest line id.
struct ParallelClasses {
  std::vector<int> class_of; // per line, -1 when the line is not self-parallel
  std::vector<std::vector<int>> classes;

  int count() const { return static_cast<int>(classes.size()); }
};

struct ParallelRelation {
  std::vector<std::vector<int>> star; // sorted star-parallel partners per line
  ParallelClasses classes;

  bool parallel(int k, int l) const {
    return classes.class_of[k] >= 0 &&
           classes.class_of[k] == classes.class_of[l];
  }
  bool self_parallel(int k) const { return classes.class_of[k] >= 0; }
};

/// k1 and k2 are disjoint and two distinct lines meeting in a point off k1
/// and k2 both cross k1 and k2 (a Veblen configuration). Direct check.
bool star_parallel(const IncidenceStructure &s, int k1, int k2);
bool star_parallel(const Complement &c, int k1, int k2);

/// Star-parallel partners of every line, by enumerating all Veblen
/// configurations around each point.
std::vector<std::vector<int>>
star_parallel_neighbors(const IncidenceStructure &s);

/// Transitive closure of star-parallelism as classes of lines.
ParallelRelation parallel_closure(const IncidenceStructure &s);
ParallelRelation parallel_closure(const Complement &c);

std::vector<int> intrinsic_affine_lines(const ParallelRelation &rel);
std::vector<int> intrinsic_affine_lines(const Complement &c);

/// No line through a point of k1 is parallel to k2. Both lines must be
/// self-parallel (DomainError otherwise).
bool anti_euclidean(const IncidenceStructure &s, const ParallelRelation &rel,
                    int k1, int k2);

/// Every representative pair of the two classes is anti-euclidean both ways.
/// Direct evaluation over all representatives.
bool equiv_classes(const IncidenceStructure &s, const ParallelRelation &rel,
                   int c1, int c2);

/// Class-level relations derived from the parallel classes.
class ClassGeometry {
public:
  ClassGeometry(const IncidenceStructure &s, ParallelRelation rel);

  const ParallelRelation &relation() const { return rel_; }
  int n_classes() const { return rel_.classes.count(); }

  /// Table form of equiv_classes: two classes are related iff no proper
  /// point lies on lines of both.
  bool equiv(int c1, int c2) const { return equiv_[c1 * n_classes() + c2]; }

  /// Representatives of the three classes forming a triangle.
  bool triangle(int c1, int c2, int c3) const;

  /// triangle, or the three classes pairwise equivalent. The classes must be
  /// pairwise distinct.
  bool ternary_collinear(int c1, int c2, int c3) const;

  /// One class set per equivalent pair: the pair together with every class
  /// equivalent to both, deduplicated and sorted.
  std::vector<std::vector<int>> lines_prime() const;

private:
  const IncidenceStructure *s_;
  ParallelRelation rel_;
  std::vector<char> equiv_;
};

/// Class sets of the semiaffine planes' affine lines, at least two classes
/// each, deduplicated and sorted.
std::vector<std::vector<int>> lines_second(const Complement &c,
                                           const ParallelRelation &rel);

enum class LineFamily { extended, prime, second };

std::string_view to_string(LineFamily f);

/// Points: proper points 0..n_proper-1, then one point per parallel class.
/// Lines sorted lexicographically; `family` and `source` index into the
/// proper lines, lines_prime() or lines_second() respectively.
struct ReconstructedStructure {
  IncidenceStructure structure;
  int n_proper_points = 0;
  int n_classes = 0;
  std::vector<LineFamily> family;
  std::vector<int> source;
  ParallelRelation parallel;

  int class_point(int cls) const { return n_proper_points + cls; }
  int count(LineFamily f) const;
};

/// Throws HorizonRefusal for a hyperplane horizon.
ReconstructedStructure reconstruct(const Complement &c);

/// Base point id -> reconstructed point id. Proper points map to themselves
/// and each horizon point to the class whose lines meet it at infinity.
/// Throws IntegrityError if a class has two points at infinity or the map is
/// not a bijection.
std::vector<int> canonical_map(const Complement &c,
                               const ReconstructedStructure &r);

} // namespace semipolar
