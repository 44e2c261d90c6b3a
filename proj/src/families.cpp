#include "charkit/families.hpp"

#include <charconv>
#include <numeric>

#include "charkit/error.hpp"
#include "charkit/modular.hpp"

namespace charkit {

namespace {

ClosureOptions named(std::string name) {
  ClosureOptions o;
  o.name = std::move(name);
  return o;
}

GroupPtr from_images(std::size_t degree, const std::vector<std::vector<Point>>& gens, std::string name) {
  std::vector<Permutation> perms;
  perms.reserve(gens.size());
  for (const auto& g : gens) perms.emplace_back(g);
  if (perms.empty()) perms.push_back(Permutation::identity(degree));
  return closure(degree, perms, named(std::move(name)));
}

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

std::size_t prime_root_of_cube(long order) {
  for (long p = 2; p * p * p <= order; ++p)
    if (p * p * p == order && modp::is_prime(static_cast<std::uint64_t>(p))) return static_cast<std::size_t>(p);
  throw InputError("extraspecial order must be the cube of a prime");
}

GroupPtr cyclic(long n, std::string name) {
  require(n >= 1 && n <= 5000, "cyclic order out of range");
  std::vector<Point> img(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return from_images(static_cast<std::size_t>(n), {img}, std::move(name));
}

GroupPtr dihedral(long order, std::string name) {
  require(order >= 6 && order % 2 == 0 && order <= 10000, "dihedral order must be even and at least 6");
  const long n = order / 2;
  std::vector<Point> rot(n), ref(n);
  for (long i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return from_images(static_cast<std::size_t>(n), {rot, ref}, std::move(name));
}

GroupPtr dicyclic(long order, std::string name) {
  require(order >= 8 && order % 4 == 0 && order <= 5000, "quaternion order must be a multiple of 4, at least 8");
  const std::size_t m = static_cast<std::size_t>(order / 4), n = 2 * m;
  // a^i b^j encoded as i + n j
  auto mul = [m, n](std::size_t x, std::size_t y) {
    const std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
    if (j == 0) return (i + k) % n + n * l;
    if (l == 0) return (i + n - k) % n + n;
    return (i + n - k + m) % n;
  };
  return regular_group(2 * n, mul, {1, n}, std::move(name));
}

GroupPtr extraspecial(long order, long type, std::string name) {
  const std::size_t p = prime_root_of_cube(order);
  if (type == 1) {
    require(p > 2, "the exponent-p extraspecial group needs an odd prime");
    // (a, b, c) encoded as a + p b + p^2 c, with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
    auto mul = [p](std::size_t x, std::size_t y) {
      const std::size_t a = x % p, b = x / p % p, c = x / (p * p);
      const std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
      return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
    };
    return regular_group(p * p * p, mul, {1, p}, std::move(name));
  }
  require(type == 2, "extraspecial type must be 1 (exponent p) or 2 (exponent p^2)");
  // (x, y) encoded as x + p^2 y: x in C_{p^2}, y in C_p acting by x -> (1+p)^y x
  const std::size_t q = p * p;
  auto mul = [p, q](std::size_t u, std::size_t v) {
    const std::size_t x = u % q, y = u / q, x2 = v % q, y2 = v / q;
    const std::size_t r = modp::pow_mod(1 + p, y, q);
    return (x + r * x2) % q + q * ((y + y2) % p);
  };
  return regular_group(q * p, mul, {1, q}, std::move(name));
}

GroupPtr semidirect(long p, long q, std::string name) {
  require(p >= 2 && p <= 5000 && modp::is_prime(static_cast<std::uint64_t>(p)), "semidirect needs a prime p");
  require(q >= 1 && (p - 1) % q == 0, "semidirect needs q dividing p - 1");
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t r = modp::pow_mod(modp::primitive_root(static_cast<std::uint32_t>(p)), (up - 1) / q, up);
  std::vector<Point> shift(p), scale(p);
  for (std::uint64_t x = 0; x < up; ++x) {
    shift[x] = static_cast<Point>((x + 1) % up);
    scale[x] = static_cast<Point>(x * r % up);
  }
  return from_images(up, {shift, scale}, std::move(name));
}

GroupPtr sl23(std::string name) {
  // nonzero vectors (x, y) of GF(3)^2, indexed 0..7 in lexicographic order
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto index_of = [&](int x, int y) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i] == std::make_pair(x, y)) return static_cast<Point>(i);
    throw InternalError("vector lookup");
  };
  std::vector<Point> upper(8), lower(8);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto [x, y] = vecs[i];
    upper[i] = index_of((x + y) % 3, y);
    lower[i] = index_of(x, (x + y) % 3);
  }
  return from_images(8, {upper, lower}, std::move(name));
}

long parse_long(std::string_view s) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InputError("bad family parameter: " + std::string(s));
  return v;
}

GroupPtr parse_single(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t dash = spec.find('-', start);
    parts.push_back(spec.substr(start, dash == std::string_view::npos ? std::string_view::npos : dash - start));
    if (dash == std::string_view::npos) break;
    start = dash + 1;
  }
  const std::string_view head = parts.front();
  std::vector<long> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (head == "extraspecial" && i == 2 && parts[i] == "p2") {
      params.push_back(2);
      continue;
    }
    params.push_back(parse_long(parts[i]));
  }
  if (head == "extraspecial" && params.size() == 1) params.push_back(1);
  return make_family(head, params);
}

GroupPtr renamed(const GroupPtr& g, std::string name) {
  return closure(g->degree(), g->generators(), named(std::move(name)));
}

}  // namespace

GroupPtr regular_group(std::size_t order, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                       const std::vector<std::size_t>& generators, std::string name) {
  require(order >= 1 && order <= Permutation::kMaxDegree, "regular representation too large");
  std::vector<std::vector<Point>> gens;
  for (std::size_t g : generators) {
    std::vector<Point> img(order);
    for (std::size_t x = 0; x < order; ++x) img[x] = static_cast<Point>(mul(x, g));
    gens.push_back(std::move(img));
  }
  return from_images(order, gens, std::move(name));
}

GroupPtr direct_product(const Group& a, const Group& b, std::string name) {
  const std::size_t da = a.degree(), db = b.degree();
  require(da + db <= Permutation::kMaxDegree, "direct product degree too large");
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t x = 0; x < da; ++x) img[x] = g[x];
    for (std::size_t x = 0; x < db; ++x) img[da + x] = static_cast<Point>(da + x);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(da + db);
    for (std::size_t x = 0; x < da; ++x) img[x] = static_cast<Point>(x);
    for (std::size_t x = 0; x < db; ++x) img[da + x] = static_cast<Point>(da + g[x]);
    gens.emplace_back(std::move(img));
  }
  return closure(da + db, gens, named(std::move(name)));
}

GroupPtr make_family(std::string_view name, const std::vector<long>& params) {
  auto arity = [&](std::size_t n) {
    if (params.size() != n) throw InputError("wrong number of parameters for family " + std::string(name));
  };
  std::string label(name);
  for (long v : params) label += "-" + std::to_string(v);
  if (name == "cyclic") return arity(1), cyclic(params[0], label);
  if (name == "dihedral") return arity(1), dihedral(params[0], label);
  if (name == "quaternion") return arity(1), dicyclic(params[0], label);
  if (name == "semidirect") return arity(2), semidirect(params[0], params[1], label);
  if (name == "extraspecial") {
    arity(2);
    label = "extraspecial-" + std::to_string(params[0]) + (params[1] == 2 ? "-p2" : "");
    return extraspecial(params[0], params[1], label);
  }
  if (name == "S3") return arity(0), from_images(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
  if (name == "S4") return arity(0), from_images(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4");
  if (name == "SL23") return arity(0), sl23("SL23");
  throw InputError("unknown group family: " + std::string(name));
}

GroupPtr parse_family(std::string_view spec) {
  if (spec.empty()) throw InputError("empty family spec");
  GroupPtr acc;
  std::size_t start = 0;
  while (true) {
    const std::size_t star = spec.find('*', start);
    const std::string_view piece =
        spec.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    GroupPtr g = parse_single(piece);
    acc = acc ? direct_product(*acc, *g, std::string(spec.substr(0, star))) : g;
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return acc->name() == spec ? acc : renamed(acc, std::string(spec));
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> c;
    for (std::size_t n = 1; n <= 24; ++n) c.push_back({"cyclic-" + std::to_string(n), n, true, true});
    for (std::size_t n = 6; n <= 32; n += 2) c.push_back({"dihedral-" + std::to_string(n), n, true, true});
    c.push_back({"quaternion-8", 8, true, true});
    c.push_back({"extraspecial-27", 27, true, true});
    c.push_back({"extraspecial-27-p2", 27, true, true});
    c.push_back({"extraspecial-125", 125, true, true});
    c.push_back({"semidirect-7-3", 21, true, true});
    c.push_back({"semidirect-5-4", 20, true, true});
    c.push_back({"S3", 6, true, true});
    c.push_back({"S4", 24, true, false});
    c.push_back({"SL23", 24, true, false});
    c.push_back({"dihedral-8*dihedral-8", 64, true, true});
    c.push_back({"cyclic-3*S3", 18, true, true});
    return c;
  }();
  return corpus;
}

}  // namespace charkit
