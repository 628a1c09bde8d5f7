#include "rcg/real_form.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rcg {

namespace {

IntMatrix induced_sc_action(const RootDatum& d, const RealFormSpec& f) {
  IntMatrix R = coroot_embedding(d).matrix;
  auto X = solve_integer_matrix(R, IntMatrix(f.theta * R));
  if (!X)
    throw NoIntegralRestriction(
        "theta does not restrict integrally to the simple-coroot lattice");
  return *X;
}

}  // namespace

void validate_form(const RootDatum& d, const RealFormSpec& f) {
  const Index n = d.rank;
  if (f.theta.rows() != n || f.theta.cols() != n)
    throw NotInvolution("theta must be " + std::to_string(n) + "x" +
                        std::to_string(n));
  if (!equal(IntMatrix(f.theta * f.theta), IntMatrix::Identity(n, n)))
    throw NotInvolution("theta^2 != identity");

  std::set<std::vector<Int>> coroot_set;
  for (Index j = 0; j < d.num_roots(); ++j)
    coroot_set.insert(column_as_vector(d.coroots, j));
  for (Index j = 0; j < d.num_roots(); ++j) {
    IntVector image = f.theta * d.coroots.col(j);
    if (!coroot_set.count(column_as_vector(IntMatrix(image), 0)))
      throw CorootSetNotStable("theta maps coroot " +
                               format_vector(d.coroots.col(j)) +
                               " to " + format_vector(image) +
                               ", which is not a coroot");
  }

  IntMatrix sc = induced_sc_action(d, f);
  const Index s = d.semisimple_rank();
  if (!equal(IntMatrix(sc * sc), IntMatrix::Identity(s, s)))
    throw NotInvolution("induced action on the simple-coroot lattice is not an involution");
}

GammaLattice cocharacter_lattice(const RootDatum& d, const RealFormSpec& f) {
  if (f.theta.rows() != d.rank || f.theta.cols() != d.rank)
    throw NotInvolution("theta has wrong size for this datum");
  return GammaLattice(f.theta);
}

GammaLattice restrict_to_sc(const RootDatum& d, const RealFormSpec& f) {
  return GammaLattice(induced_sc_action(d, f));
}

Index real_rank(const RootDatum& d, const RealFormSpec& f) {
  return invariants(cocharacter_lattice(d, f)).cols();
}

namespace {

long parse_count(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected a number for ") + what + ", got '" +
                     tok + "'");
  }
}

// Type token either bare ("A", with rank in the next token) or fused
// ("E6", "F4", "G2").
std::pair<SimpleType, Index> parse_type_rank(const std::vector<std::string>& params,
                                             size_t& pos) {
  if (pos >= params.size()) throw ParseError("missing simple type");
  std::string t = params[pos++];
  if (t.empty()) throw ParseError("empty simple type");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  SimpleType type;
  switch (letter) {
    case 'A': type = SimpleType::A; break;
    case 'B': type = SimpleType::B; break;
    case 'C': type = SimpleType::C; break;
    case 'D': type = SimpleType::D; break;
    case 'E': type = SimpleType::E; break;
    case 'F': type = SimpleType::F; break;
    case 'G': type = SimpleType::G; break;
    default: throw InvalidType("unknown simple type '" + t + "'");
  }
  Index rank;
  if (t.size() > 1) {
    rank = parse_count(t.substr(1), "rank");
  } else {
    if (pos >= params.size()) throw ParseError("missing rank after type " + t);
    rank = parse_count(params[pos++], "rank");
  }
  return {type, rank};
}

RootDatum simple_datum(SimpleType t, Index rank, const std::string& isogeny) {
  if (isogeny == "sc") return simple_sc(t, rank);
  if (isogeny == "adjoint") return simple_adjoint(t, rank);
  throw ParseError("isogeny must be 'sc' or 'adjoint', got '" + isogeny + "'");
}

// theta for U(p, q) on X_*(T) = Z^n of gl(n): m = min(p, q) coordinate
// pairs (i, n-1-i) are swapped with a sign, the middle |p - q| block is
// negated. That is the maximally split maximal torus
// (C^x)^m x (S^1)^{n-2m}: each negated swap is a C^x factor (conjugate to
// the plain swap by diag(1,-1)), each -1 a circle factor.
IntMatrix u_theta(Index p, Index q) {
  const Index n = p + q;
  const Index m = std::min(p, q);
  IntMatrix theta = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    Index target = (i < m || i >= n - m) ? n - 1 - i : i;
    theta(target, i) = -1;
  }
  return theta;
}

struct SoModel {
  RootDatum datum;
  IntMatrix theta;
};

// SO(p, q) on X_* = Z^r, r = floor((p+q)/2): type B_r when p+q is odd
// (coroots +-e_i +- e_j and +-2e_i), type D_r when even (+-e_i +- e_j),
// theta = diag(1, ..., 1, -1, ..., -1) with min(p, q) plus signs.
SoModel so_model(Index p, Index q) {
  const Index total = p + q;
  const Index r = total / 2;
  const bool odd = (total % 2) != 0;
  const Index m = std::min(p, q);

  RootDatum d;
  d.rank = r;
  std::vector<std::pair<IntVector, IntVector>> pairs;  // (root, coroot)
  auto unit = [&](Index i) {
    IntVector v = IntVector::Zero(r);
    v(i) = 1;
    return v;
  };
  for (Index i = 0; i < r; ++i)
    for (Index j = i + 1; j < r; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          IntVector v = si * unit(i) + sj * unit(j);
          pairs.push_back({v, v});
        }
  if (odd)
    for (Index i = 0; i < r; ++i)
      for (int si : {1, -1}) {
        IntVector root = si * unit(i);
        IntVector coroot = 2 * root;
        pairs.push_back({root, coroot});
      }
  d.roots.resize(r, static_cast<Index>(pairs.size()));
  d.coroots.resize(r, static_cast<Index>(pairs.size()));
  for (size_t k = 0; k < pairs.size(); ++k) {
    d.roots.col(static_cast<Index>(k)) = pairs[k].first;
    d.coroots.col(static_cast<Index>(k)) = pairs[k].second;
  }
  // Base: e_i - e_{i+1}, then e_r (odd) or e_{r-1} + e_r (even, r >= 2).
  auto find_pair = [&](const IntVector& root) {
    for (size_t k = 0; k < pairs.size(); ++k)
      if (equal(IntMatrix(pairs[k].first), IntMatrix(root)))
        return static_cast<Index>(k);
    throw InternalInconsistency("orthogonal base root not found");
  };
  for (Index i = 0; i + 1 < r; ++i)
    d.simple_indices.push_back(find_pair(unit(i) - unit(i + 1)));
  if (odd && r >= 1) d.simple_indices.push_back(find_pair(unit(r - 1)));
  if (!odd && r >= 2) d.simple_indices.push_back(find_pair(unit(r - 2) + unit(r - 1)));

  IntMatrix theta = IntMatrix::Identity(r, r);
  for (Index i = m; i < r; ++i) theta(i, i) = -1;
  return SoModel{validate(std::move(d)), std::move(theta)};
}

std::pair<RootDatum, RealFormSpec> checked(RootDatum d, RealFormSpec f,
                                           Index declared_real_rank) {
  validate_form(d, f);
  Index rr = real_rank(d, f);
  if (rr != declared_real_rank)
    throw InternalInconsistency("catalog entry " + f.name + " has real rank " +
                                std::to_string(rr) + ", declared " +
                                std::to_string(declared_real_rank));
  return {std::move(d), std::move(f)};
}

}  // namespace

std::pair<RootDatum, RealFormSpec> catalog(const std::string& name,
                                           const std::vector<std::string>& params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw ParseError("form '" + name + "' takes " + std::to_string(k) +
                       " parameter(s), got " + std::to_string(params.size()));
  };

  if (name == "split" || name == "compact") {
    size_t pos = 0;
    auto [type, rank] = parse_type_rank(params, pos);
    if (pos >= params.size()) throw ParseError("missing isogeny (sc|adjoint)");
    std::string isogeny = params[pos++];
    if (pos != params.size()) throw ParseError("trailing parameters after isogeny");
    RootDatum d = simple_datum(type, rank, isogeny);
    const bool split = (name == "split");
    IntMatrix theta = IntMatrix::Identity(rank, rank);
    if (!split) theta = -theta;
    const bool fused = type == SimpleType::E || type == SimpleType::F ||
                       type == SimpleType::G;
    std::ostringstream label;
    label << name << "/" << to_string(type) << (fused ? "" : "/") << rank
          << "/" << isogeny;
    return checked(std::move(d), RealFormSpec{std::move(theta), label.str()},
                   split ? rank : 0);
  }
  if (name == "gl" || name == "gl_r") {
    want(1);
    Index n = parse_count(params[0], "n");
    RootDatum d = gl(n);
    return checked(std::move(d),
                   RealFormSpec{IntMatrix::Identity(n, n),
                                "gl(" + std::to_string(n) + ",R)"},
                   n);
  }
  if (name == "u" || name == "su") {
    want(2);
    Index p = parse_count(params[0], "p");
    Index q = parse_count(params[1], "q");
    if (p < 0 || q < 0 || p + q < 1) throw InvalidType("u/su needs p + q >= 1");
    const Index n = p + q;
    const Index m = std::min(p, q);
    const std::string label = (name == "u" ? "u(" : "su(") + std::to_string(p) +
                              "," + std::to_string(q) + ")";
    if (name == "u")
      return checked(gl(n), RealFormSpec{u_theta(p, q), label}, m);
    if (n < 2) throw InvalidType("su needs p + q >= 2");
    // Restrict the U(p,q) involution to the sum-zero sublattice; in the
    // simple-coroot basis that is exactly the simply connected A_{n-1} datum.
    RootDatum ambient = gl(n);
    RealFormSpec ambient_form{u_theta(p, q), label};
    validate_form(ambient, ambient_form);
    GammaLattice sc = restrict_to_sc(ambient, ambient_form);
    RootDatum d = simple_sc(SimpleType::A, n - 1);
    return checked(std::move(d), RealFormSpec{sc.gamma, label}, m);
  }
  if (name == "so") {
    want(2);
    Index p = parse_count(params[0], "p");
    Index q = parse_count(params[1], "q");
    if (p < 0 || q < 0 || p + q < 1) throw InvalidType("so needs p + q >= 1");
    SoModel model = so_model(p, q);
    return checked(std::move(model.datum),
                   RealFormSpec{std::move(model.theta),
                                "so(" + std::to_string(p) + "," +
                                    std::to_string(q) + ")"},
                   std::min(p, q));
  }
  if (name == "sp2n_r") {
    want(1);
    Index n = parse_count(params[0], "n");
    if (n < 1) throw InvalidType("sp2n_r needs n >= 1");
    RootDatum d = simple_sc(SimpleType::C, n);
    return checked(std::move(d),
                   RealFormSpec{IntMatrix::Identity(n, n),
                                "sp(" + std::to_string(2 * n) + ",R)"},
                   n);
  }
  if (name == "torus") {
    want(1);
    Index n = parse_count(params[0], "n");
    RootDatum d = torus(n);
    return checked(std::move(d),
                   RealFormSpec{IntMatrix::Identity(n, n),
                                "torus(" + std::to_string(n) + ")"},
                   n);
  }
  throw UnknownForm("no catalog entry named '" + name + "'");
}

std::pair<RootDatum, RealFormSpec> parse_catalog_spec(const std::string& spec) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : spec) {
    if (ch == '/' || ch == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  tokens.push_back(cur);
  if (tokens.empty() || tokens[0].empty())
    throw ParseError("empty group spec");
  std::string name = tokens[0];
  tokens.erase(tokens.begin());
  return catalog(name, tokens);
}

std::vector<CatalogDescription> catalog_entries() {
  return {
      {"split", "split/<type>/<rank>/<sc|adjoint>",
       "split form of a simple group; theta = +1"},
      {"compact", "compact/<type>/<rank>/<sc|adjoint>",
       "compact form of a simple group; theta = -1"},
      {"gl", "gl/<n>", "GL(n,R); split reductive, nontrivial center"},
      {"u", "u/<p>/<q>", "unitary group U(p,q) on the gl(p+q) datum"},
      {"su", "su/<p>/<q>", "special unitary group SU(p,q), simply connected"},
      {"so", "so/<p>/<q>",
       "special orthogonal group SO(p,q) in standard coordinates"},
      {"sp2n_r", "sp2n_r/<n>", "Sp(2n,R); split, simply connected"},
      {"torus", "torus/<n>", "split torus of dimension n"},
  };
}

}  // namespace rcg
