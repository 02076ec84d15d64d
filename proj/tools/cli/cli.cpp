#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <memory>
#include <ostream>

#include "curvcalc/adiabatic.hpp"
#include "curvcalc/complex_io.hpp"
#include "curvcalc/curvature.hpp"
#include "curvcalc/embedding.hpp"
#include "curvcalc/error.hpp"
#include "curvcalc/euler.hpp"
#include "curvcalc/morse.hpp"
#include "curvcalc/product.hpp"
#include "curvcalc/pushforward.hpp"
#include "curvcalc/subdivision.hpp"
#include "io.hpp"

namespace curvcalc::cli {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  std::string format;
  std::size_t grid = 4096;
  std::string method = "auto";
};

struct Loaded {
  std::shared_ptr<const SimplicialComplex> complex;
  ComplexDocument doc;
};

Loaded load(const std::string& path) {
  ComplexDocument doc = read_complex_file(path);
  auto complex = std::make_shared<const SimplicialComplex>(doc.complex);
  return {std::move(complex), std::move(doc)};
}

const PLFunction& require_alpha(const Loaded& in) {
  if (!in.doc.alpha) throw Error(ErrorCode::kInvalidArgument, "the complex file has no alpha values");
  return *in.doc.alpha;
}

Embedding embedding_of(const Loaded& in, bool equilateral) {
  if (equilateral) return equilateral_embedding(in.complex);
  if (!in.doc.coordinates) {
    throw Error(ErrorCode::kInvalidArgument, "the complex file has no coordinates; pass --equilateral");
  }
  return Embedding(in.complex, *in.doc.coordinates);
}

class Context {
 public:
  Context(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  std::ostream& out() { return out_; }
  const Globals& globals() const { return g_; }
  SamplingOptions sampling() const { return {g_.samples, g_.seed}; }

  bool json_output(std::string_view fallback) const {
    return (g_.format.empty() ? fallback : std::string_view(g_.format)) == "json";
  }

  Method method_for(const Embedding& e) const {
    if (g_.method == "exact") return Method::kExact;
    if (g_.method == "mc") return Method::kMonteCarlo;
    return e.ambient_dimension() <= 3 ? Method::kExact : Method::kMonteCarlo;
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

 private:
  const Globals& g_;
  std::ostream& out_;
};

std::string_view method_name(Method m) { return m == Method::kExact ? "exact" : "mc"; }

void write_measure_csv(std::ostream& out, const SimplicialComplex& complex, const CurvatureMeasure& m) {
  out << "vertex,kappa,stderr\n";
  for (const VertexAtom& a : m.atoms) {
    out << complex.vertex_name(a.vertex) << ',' << format_double(a.kappa.value) << ','
        << format_double(a.kappa.std_error) << '\n';
  }
}

json measure_json(const SimplicialComplex& complex, const CurvatureMeasure& m) {
  json atoms = json::array();
  for (const VertexAtom& a : m.atoms) {
    atoms.push_back({{"vertex", complex.vertex_name(a.vertex)},
                     {"kappa", round12(a.kappa.value)},
                     {"stderr", round12(a.kappa.std_error)}});
  }
  return atoms;
}

json base_measure_summary(const BaseMeasure& m) {
  return {{"eps", round12(m.eps)},
          {"interior_mass", round12(m.interior_mass)},
          {"atom_a", round12(m.atom_a)},
          {"atom_b", round12(m.atom_b)},
          {"kind_a", std::string(to_string(m.kind_a))},
          {"kind_b", std::string(to_string(m.kind_b))},
          {"total", round12(m.total())}};
}

// Subdivision that also carries coordinates to the barycenters.
ComplexDocument subdivide_document(const ComplexDocument& doc, std::size_t times) {
  ComplexDocument cur = doc;
  for (std::size_t k = 0; k < times; ++k) {
    const PLFunction alpha = cur.alpha ? *cur.alpha : PLFunction::constant(cur.complex, 0);
    Subdivision sub = barycentric_subdivide(cur.complex, alpha);
    ComplexDocument next{sub.complex, std::nullopt, std::nullopt};
    if (cur.alpha) next.alpha = sub.alpha;
    if (cur.coordinates) {
      Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(sub.complex.vertex_bound(), cur.coordinates->cols());
      for (VertexId v : sub.complex.vertices()) {
        const Simplex& s = cur.complex.simplex(sub.carrier[v]);
        for (VertexId w : s) coords.row(v) += cur.coordinates->row(w);
        coords.row(v) /= static_cast<double>(s.size());
      }
      next.coordinates = std::move(coords);
    }
    cur = std::move(next);
  }
  return cur;
}

using Handler = std::function<void(Context&)>;

struct Registry {
  std::vector<Command> commands;
  std::map<std::string, Handler, std::less<>> handlers;
};

// Options are owned here so CLI11 can bind to them by reference.
struct Options {
  std::string file;
  std::vector<std::string> files;
  std::string kind = "tentative";
  long n = 0;
  std::string function_path;
  std::string pieces_path;
  bool equilateral = false;
  std::size_t times = 1;
  std::size_t dim = 2;
  std::string vertex;
  std::string simplex;
  std::string direction;
  std::string source, middle, target, map, inner, outer;
  bool curvature = false;
  bool canonical = false;
  std::string profile = "sphere";
  std::string eps = "0,0.5,0.9,0.99";
  bool periodic = false;
};

void build(CLI::App& app, Options& o, Registry& reg) {
  auto add = [&](std::string name, std::string summary, std::vector<std::string> ops, Handler h) {
    CLI::App* sub = app.add_subcommand(name, summary);
    sub->fallthrough();
    reg.commands.push_back({name, summary, std::move(ops)});
    reg.handlers.emplace(name, std::move(h));
    return sub;
  };

  // validate
  {
    auto* s = add("validate", "Parse a complex file and report its invariants",
                  {"validate", "parse", "serialize"}, [&o](Context& ctx) {
                    const Loaded in = load(o.file);
                    validate(in.complex->simplices());
                    if (o.canonical) {
                      ctx.out() << serialize_complex(in.doc);
                      return;
                    }
                    ctx.emit({{"valid", true},
                              {"vertices", in.complex->vertices().size()},
                              {"simplices", in.complex->size()},
                              {"dimension", in.complex->dimension()},
                              {"f_vector", in.complex->f_vector()},
                              {"euler_characteristic", in.complex->euler_characteristic()}});
                  });
    s->add_option("file", o.file, "complex file")->required();
    s->add_flag("--canonical", o.canonical, "print the canonical serialization instead");
  }

  // integrate
  {
    auto* s = add(
        "integrate", "Integrate against Euler characteristic or curvature",
        {"euler_integral", "chi_c", "floor_integral", "ceil_integral", "floor_integral_oracle_1d",
         "tentative_integral", "curvature_integral", "final_integral"},
        [&o](Context& ctx) {
          const Loaded in = load(o.file);
          const SimplicialComplex& X = *in.complex;
          auto exact_value = [&](const Rational& r) { ctx.emit({{"value", to_string(r)}}); };
          auto float_value = [&](const Estimate& e, Method m) {
            ctx.emit({{"value", round12(e.value)},
                      {"stderr", round12(e.std_error)},
                      {"method", std::string(method_name(m))}});
          };
          if (o.kind == "floor") {
            exact_value(floor_integral(X, require_alpha(in)));
          } else if (o.kind == "ceil") {
            exact_value(ceil_integral(X, require_alpha(in)));
          } else if (o.kind == "tentative") {
            exact_value(tentative_integral(X, require_alpha(in)));
          } else if (o.kind == "simple") {
            if (o.function_path.empty()) {
              std::vector<std::size_t> all(X.size());
              for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
              exact_value(Rational(chi_c(X, std::span<const std::size_t>(all))));
            } else {
              exact_value(euler_integral(X, parse_function(read_json_file(o.function_path), X)));
            }
          } else if (o.kind == "floor-limit" || o.kind == "ceil-limit") {
            const Rounding r = o.kind == "floor-limit" ? Rounding::kFloor : Rounding::kCeil;
            exact_value(level_set_integral_1d(X, require_alpha(in), o.n, r));
          } else if (o.kind == "curvature") {
            const Embedding e = embedding_of(in, o.equilateral);
            const Method m = ctx.method_for(e);
            float_value(curvature_integral(e, require_alpha(in), m, ctx.sampling()), m);
          } else if (o.kind == "final") {
            if (o.pieces_path.empty()) throw Error(ErrorCode::kInvalidArgument, "--kind final needs --pieces");
            const Embedding e = embedding_of(in, o.equilateral);
            const Method m = ctx.method_for(e);
            const std::vector<Piece> pieces = parse_pieces(read_json_file(o.pieces_path), X);
            float_value(final_integral(e, pieces, m, ctx.sampling()), m);
          }
        });
    s->add_option("file", o.file, "complex file")->required();
    s->add_option("--kind", o.kind, "integral kind")
        ->check(CLI::IsMember({"floor", "ceil", "tentative", "simple", "floor-limit", "ceil-limit", "curvature",
                               "final"}));
    s->add_option("--n", o.n, "resolution for floor-limit and ceil-limit")->check(CLI::PositiveNumber);
    s->add_option("--function", o.function_path, "constructible function JSON for --kind simple");
    s->add_option("--pieces", o.pieces_path, "pieces JSON for --kind final");
    s->add_flag("--equilateral", o.equilateral, "use the equilateral embedding");
  }

  // subdivide
  {
    auto* s = add("subdivide", "Barycentric subdivision", {"barycentric_subdivide"}, [&o](Context& ctx) {
      const Loaded in = load(o.file);
      const ComplexDocument sub = subdivide_document(in.doc, o.times);
      if (ctx.json_output("text")) {
        json j{{"f_vector", sub.complex.f_vector()}, {"simplices", sub.complex.size()}};
        if (sub.alpha) j["tentative_integral"] = to_string(tentative_integral(sub.complex, *sub.alpha));
        ctx.emit(j);
      } else {
        ctx.out() << serialize_complex(sub);
      }
    });
    s->add_option("file", o.file, "complex file")->required();
    s->add_option("--times", o.times, "number of subdivisions");
  }

  // census
  {
    auto* s = add("census", "Signature census of the subdivided standard simplex", {"signature_census"},
                  [&o](Context& ctx) {
                    const SignatureCensus c = signature_census(o.dim);
                    if (ctx.json_output("csv")) {
                      json sigs = json::array();
                      for (const auto& [sig, count] : c.counts) {
                        json sum = json::array();
                        for (const Rational& r : c.grouped_sums.at(sig)) sum.push_back(to_string(r));
                        sigs.push_back({{"signature", sig.parts}, {"count", count}, {"grouped_sum", sum}});
                      }
                      ctx.emit({{"dimension", c.dimension}, {"total", c.total_count()}, {"signatures", sigs}});
                      return;
                    }
                    ctx.out() << "signature,count\n";
                    for (const auto& [sig, count] : c.counts) {
                      ctx.out() << '"' << to_string(sig) << "\"," << count << '\n';
                    }
                  });
    s->add_option("--dim", o.dim, "dimension of the standard simplex")->check(CLI::Range(0, 8));
  }

  // link
  {
    auto* s = add("link", "Star and link of a vertex", {"star", "link"}, [&o](Context& ctx) {
      const Loaded in = load(o.file);
      const SimplicialComplex& X = *in.complex;
      const auto v = X.find_vertex(o.vertex);
      if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + o.vertex + "'");
      json star = json::array(), link = json::array();
      for (std::size_t i : X.star(*v)) star.push_back(simplex_names(X.simplex(i), X));
      const SimplicialComplex L = X.link(*v);
      for (const Simplex& s : L.simplices()) link.push_back(simplex_names(s, X));
      ctx.emit({{"vertex", o.vertex}, {"star", star}, {"link", link},
                {"link_euler_characteristic", L.euler_characteristic()}});
    });
    s->add_option("file", o.file, "complex file")->required();
    s->add_option("--vertex", o.vertex, "vertex name")->required();
  }

  // weights
  {
    auto* s = add("weights", "Vertex weights", {"weight"}, [&o](Context& ctx) {
      const Loaded in = load(o.file);
      const SimplicialComplex& X = *in.complex;
      const std::vector<Rational> w = weights(X);
      if (ctx.json_output("csv")) {
        json j = json::object();
        for (VertexId v : X.vertices()) j[X.vertex_name(v)] = to_string(w[v]);
        ctx.emit({{"weights", j}});
        return;
      }
      ctx.out() << "vertex,weight\n";
      for (VertexId v : X.vertices()) ctx.out() << X.vertex_name(v) << ',' << to_string(w[v]) << '\n';
    });
    s->add_option("file", o.file, "complex file")->required();
  }

  // curvature
  {
    auto* s = add("curvature", "Banchoff curvature at every vertex",
                  {"banchoff_curvature", "equilateral_embedding"}, [&o](Context& ctx) {
                    const Loaded in = load(o.file);
                    const Embedding e = embedding_of(in, o.equilateral);
                    const Method m = ctx.method_for(e);
                    const CurvatureMeasure measure = banchoff_measure(e, m, ctx.sampling());
                    if (ctx.json_output("csv")) {
                      ctx.emit({{"method", std::string(method_name(m))}, {"atoms", measure_json(*in.complex, measure)}});
                    } else {
                      write_measure_csv(ctx.out(), *in.complex, measure);
                    }
                  });
    s->add_option("file", o.file, "complex file")->required();
    s->add_flag("--equilateral", o.equilateral, "use the equilateral embedding");
  }

  // excess-angle
  {
    auto* s = add("excess-angle", "Excess angle of one simplex at one of its vertices", {"excess_angle"},
                  [&o](Context& ctx) {
                    const Loaded in = load(o.file);
                    const Embedding e = embedding_of(in, o.equilateral);
                    const Method m = ctx.method_for(e);
                    const Simplex simplex = parse_simplex_names(o.simplex, *in.complex);
                    in.complex->require_index(simplex);
                    const auto v = in.complex->find_vertex(o.vertex);
                    if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + o.vertex + "'");
                    const Estimate r = excess_angle(e, simplex, *v, m, ctx.sampling());
                    ctx.emit({{"value", round12(r.value)},
                              {"stderr", round12(r.std_error)},
                              {"method", std::string(method_name(m))}});
                  });
    s->add_option("file", o.file, "complex file")->required();
    s->add_option("--simplex", o.simplex, "comma-separated vertex names")->required();
    s->add_option("--vertex", o.vertex, "vertex name")->required();
    s->add_flag("--equilateral", o.equilateral, "use the equilateral embedding");
  }

  // gauss-bonnet-check
  {
    auto* s = add("gauss-bonnet-check", "Compare total curvature with the Euler characteristic",
                  {"banchoff_curvature"}, [&o](Context& ctx) {
                    const Loaded in = load(o.file);
                    const Embedding e = embedding_of(in, o.equilateral);
                    const Method m = ctx.method_for(e);
                    const Estimate total = banchoff_measure(e, m, ctx.sampling()).total();
                    const long chi = in.complex->euler_characteristic();
                    const double bound = m == Method::kExact ? 1e-9 : 4.0 * total.std_error;
                    ctx.emit({{"sum_kappa", round12(total.value)},
                              {"euler_characteristic", chi},
                              {"bound", round12(bound)},
                              {"method", std::string(method_name(m))},
                              {"pass", std::abs(total.value - static_cast<double>(chi)) <= bound}});
                  });
    s->add_option("file", o.file, "complex file")->required();
    s->add_flag("--equilateral", o.equilateral, "use the equilateral embedding");
  }

  // morse-curvature
  {
    auto* s = add("morse-curvature", "Curvature as the average Morse index over directions",
                  {"bk_curvature_measure"}, [&o](Context& ctx) {
                    const Loaded in = load(o.file);
                    const Embedding e = embedding_of(in, o.equilateral);
                    const MorseCurvature r = bk_curvature_measure(e, ctx.sampling());
                    if (ctx.json_output("csv")) {
                      ctx.emit({{"samples", r.samples}, {"redraws", r.redraws},
                                {"atoms", measure_json(*in.complex, r.measure)}});
                    } else {
                      write_measure_csv(ctx.out(), *in.complex, r.measure);
                    }
                  });
    s->add_option("file", o.file, "complex file")->required();
    s->add_flag("--equilateral", o.equilateral, "use the equilateral embedding");
  }

  // morse-index
  {
    auto* s = add("morse-index", "Morse index of every vertex for one height function",
                  {"morse_index", "chi_sum_check", "lower_structure"}, [&o](Context& ctx) {
                    const Loaded in = load(o.file);
                    const Embedding e = embedding_of(in, o.equilateral);
                    const std::vector<double> xs = parse_double_list(o.direction);
                    const Direction x = Direction::normalized(Eigen::Map<const Eigen::VectorXd>(
                        xs.data(), static_cast<Eigen::Index>(xs.size())));
                    if (x.dimension() != e.ambient_dimension()) {
                      throw Error(ErrorCode::kDimensionMismatch, "direction has the wrong number of coordinates");
                    }
                    std::vector<std::pair<VertexId, int>> rows;
                    for (VertexId v : in.complex->vertices()) rows.emplace_back(v, morse_index(e, v, x));
                    if (ctx.json_output("csv")) {
                      json idx = json::object();
                      for (const auto& [v, i] : rows) idx[in.complex->vertex_name(v)] = i;
                      ctx.emit({{"indices", idx},
                                {"sum", chi_sum_check(e, x)},
                                {"euler_characteristic", in.complex->euler_characteristic()}});
                      return;
                    }
                    ctx.out() << "vertex,index\n";
                    for (const auto& [v, i] : rows) ctx.out() << in.complex->vertex_name(v) << ',' << i << '\n';
                  });
    s->add_option("file", o.file, "complex file")->required();
    s->add_option("--direction", o.direction, "comma-separated direction")->required();
    s->add_flag("--equilateral", o.equilateral, "use the equilateral embedding");
  }

  auto map_options = [&o](CLI::App* s) {
    s->add_option("--source", o.source, "source complex file")->required();
    s->add_option("--target", o.target, "target complex file")->required();
    s->add_option("--map", o.map, "map file")->required();
  };
  struct MapInput {
    Loaded source, target;
    SimplicialMap f;
  };
  auto load_map = [&o]() {
    Loaded src = load(o.source), tgt = load(o.target);
    SimplicialMap f = parse_map(read_text_file(o.map), src.complex, tgt.complex);
    return MapInput{std::move(src), std::move(tgt), std::move(f)};
  };

  // pushforward
  {
    auto* s = add("pushforward", "Push a constructible function forward along a simplicial map", {"pushforward"},
                  [&o, load_map](Context& ctx) {
                    const MapInput in = load_map();
                    const SimplicialComplex& X = *in.source.complex;
                    const ConstructibleFunction s =
                        o.function_path.empty() ? unit_function(X) : parse_function(read_json_file(o.function_path), X);
                    const ConstructibleFunction pushed = pushforward(in.f, s);
                    json j = function_to_json(pushed, *in.target.complex);
                    j["integral"] = to_string(euler_integral(*in.target.complex, pushed));
                    ctx.emit(j);
                  });
    map_options(s);
    s->add_option("--function", o.function_path, "constructible function JSON on the source (default 1)");
  }

  // fiber
  {
    auto* s = add("fiber", "Euler characteristic of the fiber over an open target simplex", {"fiber_euler"},
                  [&o, load_map](Context& ctx) {
                    const MapInput in = load_map();
                    const Simplex tau = parse_simplex_names(o.simplex, *in.target.complex);
                    ctx.emit({{"simplex", simplex_names(tau, *in.target.complex)}, {"fiber_euler", fiber_euler(in.f, tau)}});
                  });
    map_options(s);
    s->add_option("--simplex", o.simplex, "target simplex as comma-separated names")->required();
  }

  // functoriality
  {
    auto* s = add("functoriality", "Compare (f o g)_* with f_* g_*", {"check_functoriality"}, [&o](Context& ctx) {
      const Loaded X = load(o.source), Y = load(o.middle), Z = load(o.target);
      const SimplicialMap g = parse_map(read_text_file(o.inner), X.complex, Y.complex);
      const SimplicialMap f = parse_map(read_text_file(o.outer), Y.complex, Z.complex);
      const ConstructibleFunction s =
          o.function_path.empty() ? unit_function(*X.complex) : parse_function(read_json_file(o.function_path), *X.complex);
      json j{{"equal", check_functoriality(f, g, s)}};
      j["composite"] = function_to_json(pushforward(compose(f, g), s), *Z.complex);
      ctx.emit(j);
    });
    s->add_option("--source", o.source, "complex X")->required();
    s->add_option("--middle", o.middle, "complex Y")->required();
    s->add_option("--target", o.target, "complex Z")->required();
    s->add_option("--inner", o.inner, "map file X -> Y")->required();
    s->add_option("--outer", o.outer, "map file Y -> Z")->required();
    s->add_option("--function", o.function_path, "constructible function JSON on X (default 1)");
  }

  // fubini-check
  {
    auto* s = add(
        "fubini-check", "Fubini for Euler integrals or curvature on a product",
        {"product", "fubini_chi", "fubini_curvature"}, [&o](Context& ctx) {
          std::vector<Loaded> in;
          for (const std::string& f : o.files) in.push_back(load(f));
          if (o.curvature) {
            std::vector<Embedding> factors;
            for (const Loaded& l : in) factors.push_back(embedding_of(l, o.equilateral));
            const auto rows = fubini_curvature(factors, ctx.sampling());
            auto names = [&](const ProductCurvatureRow& r) {
              json v = json::array();
              for (std::size_t k = 0; k < r.vertex.size(); ++k) v.push_back(in[k].complex->vertex_name(r.vertex[k]));
              return v;
            };
            if (ctx.json_output("json")) {
              json out = json::array();
              for (const auto& r : rows) {
                out.push_back({{"vertex", names(r)},
                               {"product_kappa", round12(r.product.value)},
                               {"product_stderr", round12(r.product.std_error)},
                               {"factor_kappa", round12(r.factors.value)},
                               {"factor_stderr", round12(r.factors.std_error)},
                               {"joint_error", round12(r.joint_error)},
                               {"within", std::abs(r.product.value - r.factors.value) <= 4.0 * r.joint_error}});
              }
              ctx.emit({{"rows", out}});
            } else {
              ctx.out() << "vertex,product_kappa,product_stderr,factor_kappa,factor_stderr,joint_error\n";
              for (const auto& r : rows) {
                std::string label;
                for (const auto& n : names(r)) label += (label.empty() ? "" : "x") + n.get<std::string>();
                ctx.out() << label << ',' << format_double(r.product.value) << ','
                          << format_double(r.product.std_error) << ',' << format_double(r.factors.value) << ','
                          << format_double(r.factors.std_error) << ',' << format_double(r.joint_error) << '\n';
              }
            }
            return;
          }
          std::vector<SimplicialComplex> factors;
          for (const Loaded& l : in) factors.push_back(*l.complex);
          const ProductCellComplex P(std::move(factors));
          const ConstructibleFunction s = o.function_path.empty()
                                              ? unit_function(P)
                                              : parse_product_function(read_json_file(o.function_path), P);
          const FubiniTriple t = fubini_chi(P, s);
          if (ctx.json_output("json")) {
            ctx.emit({{"direct", to_string(t.direct)},
                      {"iterated_first", to_string(t.iterated_first)},
                      {"iterated_rest", to_string(t.iterated_rest)},
                      {"agree", t.agree()}});
          } else {
            ctx.out() << "direct,iterated_first,iterated_rest\n"
                      << to_string(t.direct) << ',' << to_string(t.iterated_first) << ','
                      << to_string(t.iterated_rest) << '\n';
          }
        });
    s->add_option("files", o.files, "factor complex files")->required()->expected(2, 8);
    s->add_option("--function", o.function_path, "constructible function JSON on the product (default 1)");
    s->add_flag("--curvature", o.curvature, "compare product curvature with the product of factor curvatures");
    s->add_flag("--equilateral", o.equilateral, "use the equilateral embedding of each factor");
  }

  // adiabatic
  {
    auto* s = add("adiabatic", "Pushed-forward curvature of a surface of revolution as the fibers shrink",
                  {"curvature_density", "adiabatic_sweep", "nonsplit_demo"}, [&o](Context& ctx) {
                    const std::size_t grid = ctx.globals().grid;
                    const WarpFunction w =
                        o.profile.rfind("file:", 0) == 0
                            ? parse_warp_csv(o.profile.substr(5), read_text_file(o.profile.substr(5)), o.periodic)
                            : WarpFunction::builtin(o.profile, grid);
                    const std::vector<double> eps = parse_double_list(o.eps);
                    const std::vector<BaseMeasure> sweep = adiabatic_sweep(w, eps);
                    if (ctx.json_output("csv")) {
                      const NonsplitReport r = nonsplit_demo(w);
                      json rows = json::array();
                      for (const BaseMeasure& m : sweep) rows.push_back(base_measure_summary(m));
                      ctx.emit({{"profile", w.name()},
                                {"grid", w.size()},
                                {"sweep", rows},
                                {"nonsplit",
                                 {{"positive_length", round12(r.positive_length)},
                                  {"nonzero_length", round12(r.nonzero_length)},
                                  {"base_atoms", {round12(r.base_atom_a), round12(r.base_atom_b)}},
                                  {"base_interior_mass", round12(r.base_interior_mass)},
                                  {"not_absolutely_continuous", r.not_absolutely_continuous},
                                  {"limit_atoms", {round12(r.limit_atom_a), round12(r.limit_atom_b)}},
                                  {"chi_fiber_times_base_atoms",
                                   {round12(r.chi_fiber_times_base_a), round12(r.chi_fiber_times_base_b)}},
                                  {"limit_mismatch", r.limit_mismatch}}}});
                      return;
                    }
                    ctx.out() << "eps,t,lambda\n";
                    for (const BaseMeasure& m : sweep) {
                      for (std::size_t i = 0; i < m.t.size(); ++i) {
                        ctx.out() << format_double(m.eps) << ',' << format_double(m.t[i]) << ','
                                  << format_double(m.density[i]) << '\n';
                      }
                    }
                  });
    s->add_option("--profile", o.profile, "sphere|cylinder|cone|torus|paraboloid|file:<csv>");
    s->add_option("--eps", o.eps, "comma-separated shrink parameters in [0, 1)");
    s->add_flag("--periodic", o.periodic, "treat a file profile as periodic");
  }
}

Registry& static_registry() {
  static Registry reg = [] {
    CLI::App app;
    Options o;
    Registry r;
    build(app, o, r);
    r.handlers.clear();
    return r;
  }();
  return reg;
}

}  // namespace

const std::vector<Command>& dispatch_table() { return static_registry().commands; }

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler and curvature calculus on simplicial complexes", "curvcalc"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--samples", g.samples, "Monte Carlo samples")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--grid", g.grid, "grid points for profiles")->check(CLI::Range(5ul, 100000000ul))->capture_default_str();
  app.add_option("--method", g.method, "curvature method")
      ->check(CLI::IsMember({"auto", "exact", "mc"}))
      ->capture_default_str();

  Options o;
  Registry reg;
  build(app, o, reg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Context ctx(g, out);
  try {
    reg.handlers.at(name)(ctx);
  } catch (const Error& e) {
    err << "error: E" << static_cast<int>(e.code()) << ' ' << error_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace curvcalc::cli
