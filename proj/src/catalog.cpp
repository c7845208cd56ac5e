#include "bohr/catalog.hpp"

#include <cstdlib>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

GoldenCell cell(double p, int m, int N, std::string_view printed,
                std::optional<std::string_view> anomaly = std::nullopt) {
  std::string text(printed);
  for (char& c : text)
    if (c == ',') c = '.';
  return {{p, m, N}, printed, std::strtod(text.c_str(), nullptr), anomaly};
}

std::vector<TableSpec> build_tables() {
  std::vector<TableSpec> tables;
  tables.reserve(16);
  tables.push_back({"R1", LiteralTag::R1eq, "Computation of $R_1^{m,N}(p)$", {true, true, true},
      {
       cell(1, 1, 5, "0.568466"),
       cell(1, 1, 10, "0.696983"),
       cell(1, 1, 15, "0.760135"),
       cell(2, 1, 5, "0.61803"),
       cell(2, 1, 10, "0.729092"),
       cell(2, 1, 15, "0.78422"),
       cell(1, 2, 5, "0.614046"),
       cell(1, 2, 10, "0.727963"),
       cell(1, 2, 15, "0.783716"),
       cell(2, 2, 5, "0.664727"),
       cell(2, 2, 10, "0.759979"),
       cell(2, 2, 15, "0.807561"),
       cell(1, 3, 5, "0.638474"),
       cell(1, 3, 10, "0.745208"),
       cell(1, 3, 15, "0.797015"),
       cell(2, 3, 5, "0.690133"),
       cell(2, 3, 10, "0.777215"),
       cell(2, 3, 15, "0.820717"),
       cell(1, 4, 5, "0.653901"),
       cell(1, 4, 10, "0.756719"),
       cell(1, 4, 15, "0.80606"),
       cell(2, 4, 5, "0.706669"),
       cell(2, 4, 10, "0.788828"),
       cell(2, 4, 15, "0.8297"),
      }});
  tables.push_back({"R2", LiteralTag::R2eq, "Computation of the roots $R_2^m(p)$", {true, false, true},
      {
       cell(1, 1, 1, "0.41421"),
       cell(2, 1, 1, "0.5"),
       cell(1, 2, 1, "0.48587"),
       cell(2, 2, 1, "0.57735"),
       cell(1, 3, 1, "0.52236"),
       cell(2, 3, 1, "0.61803"),
       cell(1, 4, 1, "0.54369"),
       cell(2, 4, 1, "0.64359"),
      }});
  tables.push_back({"R3", LiteralTag::R3eq, "The roots $R_3^m(p)$", {true, false, true},
      {
       cell(1, 1, 1, "0.26795"),
       cell(2, 1, 1, "0.38197"),
       cell(1, 2, 1, "0.34601"),
       cell(2, 2, 1, "0.48053"),
       cell(1, 3, 1, "0.38197"),
       cell(2, 3, 1, "0.53101"),
       cell(1, 4, 1, "0.399389"),
       cell(2, 4, 1, "0.56127"),
      }});
  tables.push_back({"R4", LiteralTag::R4eq, "Computation of $R_4^{m,N}(p)$", {true, true, true},
      {
       cell(1, 1, 5, "0.438303"),
       cell(1, 1, 10, "0.581973"),
       cell(1, 1, 15, "0.659598"),
       cell(2, 1, 5, "0.48227"),
       cell(2, 1, 10, "0.612325"),
       cell(2, 1, 15, "0.683058"),
       cell(1, 2, 5, "0.474555"),
       cell(1, 2, 10, "0.609805"),
       cell(1, 2, 15, "0.681863"),
       cell(2, 2, 5, "0.521603"),
       cell(2, 2, 10, "0.641053"),
       cell(2, 2, 15, "0.705692"),
       cell(1, 3, 5, "0.491663"),
       cell(1, 3, 10, "0.624482"),
       cell(1, 3, 15, "0.694054"),
       cell(2, 3, 5, "0.54118"),
       cell(2, 3, 10, "0.656495"),
       cell(2, 3, 15, "0.718209"),
       cell(1, 4, 5, "0.500617"),
       cell(1, 4, 10, "0.633465"),
       cell(1, 4, 15, "0.701928"),
       cell(2, 4, 5, "0.552248"),
       cell(2, 4, 10, "0.66623"),
       cell(2, 4, 15, "0.726424"),
      }});
  tables.push_back({"R5", LiteralTag::R5eq, "The values of $R_5^{m,N}(p)$", {true, true, true},
      {
       cell(1, 1, 5, "0.552822"),
       cell(1, 1, 10, "0.689323"),
       cell(1, 1, 15, "0.75805"),
       cell(2, 1, 5, "0.621637"),
       cell(2, 1, 10, "0.733723"),
       cell(2, 1, 15, "0.79105"),
       cell(1, 2, 5, "0.615996"),
       cell(1, 2, 10, "0.732181"),
       cell(1, 2, 15, "0.790394"),
       cell(2, 2, 5, "0.691438"),
       cell(2, 2, 10, "0.77864"),
       cell(2, 2, 15, "0.824341"),
       cell(1, 3, 5, "0.652463"),
       cell(1, 3, 10, "0.757175"),
       cell(1, 3, 15, "0.809302"),
       cell(2, 3, 5, "0.732289"),
       cell(2, 3, 10, "0.804895"),
       cell(2, 3, 15, "0.843792"),
       cell(1, 4, 5, "0.677166"),
       cell(1, 4, 10, "0.774533"),
       cell(1, 4, 15, "0.82254"),
       cell(2, 4, 5, "0.760641"),
       cell(2, 4, 10, "0.823255"),
       cell(2, 4, 15, "0.857442"),
      }});
  tables.push_back({"R6", LiteralTag::R6eq, "Computation of $R_6^{m,N}(p)$", {true, true, true},
      {
       cell(1, 1, 5, "0.384343"),
       cell(1, 1, 10, "0.512948"),
       cell(1, 1, 15, "0.591745"),
       cell(2, 1, 5, "0.423699"),
       cell(2, 1, 10, "0.540931"),
       cell(2, 1, 15, "0.613822"),
       cell(1, 2, 5, "0.414554"),
       cell(1, 2, 10, "0.537391"),
       cell(1, 2, 15, "0.612014"),
       cell(2, 2, 5, "0.456968"),
       cell(2, 2, 10, "0.566525"),
       cell(2, 2, 15, "0.634665"),
       cell(1, 3, 5, "0.427417"),
       cell(1, 3, 10, "0.549435"),
       cell(1, 3, 15, "0.622616"),
       cell(2, 3, 5, "0.472121"),
       cell(2, 3, 10, "0.579505"),
       cell(2, 3, 15, "0.645746"),
       cell(1, 4, 5, "0.433293"),
       cell(1, 4, 10, "0.556135"),
       cell(1, 4, 15, "0.629021"),
       cell(2, 4, 5, "0.479709"),
       cell(2, 4, 10, "0.587025"),
       cell(2, 4, 15, "0.652601"),
      }});
  tables.push_back({"R7", LiteralTag::R7eq, "The roots $R_7^n$", {false, true, false},
      {
       cell(1, 1, 1, "0.23607"),
       cell(1, 1, 2, "0.41421"),
       cell(1, 1, 3, "0.51624"),
       cell(1, 1, 4, "0.58378"),
      }});
  tables.push_back({"R8", LiteralTag::R8eq, "Computation of $R_8^{m,N}(p)$", {true, true, true},
      {
       cell(1, 1, 5, "0.470417"),
       cell(1, 1, 10, "0.498733"),
       cell(1, 1, 15, "0.499959"),
       cell(2, 1, 5, "0.482881"),
       cell(2, 1, 10, "0.499358"),
       cell(2, 1, 15, "0.49998"),
       cell(1, 2, 5, "0.561279"),
       cell(1, 2, 10, "0.610534"),
       cell(1, 2, 15, "0.617281"),
       cell(2, 2, 5, "0.583333"),
       cell(2, 2, 10, "0.614053"),
       cell(2, 2, 15, "0.617654"),
       cell(1, 3, 5, "0.605857"),
       cell(1, 3, 10, "0.666331"),
       cell(1, 3, 15, "0.679507"),
       cell(2, 3, 5, "0.634512"),
       cell(2, 3, 10, "0.673433"),
       cell(2, 3, 15, "0.680874"),
       cell(1, 4, 5, "0.632413"),
       cell(1, 4, 10, "0.699984"),
       cell(1, 4, 15, "0.718457"),
       cell(2, 4, 5, "0.666291"),
       cell(2, 4, 10, "0.710367"),
       cell(2, 4, 15, "0.721294"),
      }});
  tables.push_back({"R9", LiteralTag::R9eq, "The values $R_9^{m,N}(p)$", {true, true, true},
      {
       cell(1, 1, 5, "0.459924"),
       cell(1, 1, 10, "0.470621", "printed value duplicates the m=1, N=5, p=2 cell"),
       cell(1, 1, 15, "0.481132"),
       cell(2, 1, 5, "0.470621"),
       cell(2, 1, 10, "0.480648"),
       cell(2, 1, 15, "0.485091"),
       cell(1, 2, 5, "0.570642"),
       cell(1, 2, 10, "0.588913"),
       cell(1, 2, 15, "0.596301"),
       cell(2, 2, 5, "0.58335"),
       cell(2, 2, 10, "0.595553"),
       cell(2, 2, 15, "0.600837"),
       cell(1, 3, 5, "0.631077"),
       cell(1, 3, 10, "0.651295"),
       cell(1, 3, 15, "0.659307"),
       cell(2, 3, 5, "0.644949"),
       cell(2, 3, 10, "0.658391"),
       cell(2, 3, 15, "0.664114"),
       cell(1, 4, 5, "0.670628"),
       cell(1, 4, 10, "0.692296"),
       cell(1, 4, 15, "0.700735"),
       cell(2, 4, 5, "0.68537"),
       cell(2, 4, 10, "0.699696"),
       cell(2, 4, 15, "0.705709"),
      }});
  tables.push_back({"R10", LiteralTag::R10eq, "Computation of $R_{10}^{m,N}(p)$", {true, true, true},
      {
       cell(1, 1, 5, "0.457053"),
       cell(1, 1, 10, "0.474009"),
       cell(1, 1, 15, "0.480671"),
       cell(2, 1, 5, "0.468802"),
       cell(2, 1, 10, "0,480015", "comma decimal separator in the printed cell"),
       cell(2, 1, 15, "0.484755"),
       cell(1, 2, 5, "0.567068"),
       cell(1, 2, 10, "0.587828"),
       cell(1, 2, 15, "0.595758"),
       cell(2, 2, 5, "0.581095"),
       cell(2, 2, 10, "0.594794"),
       cell(2, 2, 15, "0.600441"),
       cell(1, 3, 5, "0.627057"),
       cell(1, 3, 10, "0.65011"),
       cell(1, 3, 15, "0.658721"),
       cell(2, 3, 5, "0.642428"),
       cell(2, 3, 10, "0.657565"),
       cell(2, 3, 15, "0.663687"),
       cell(1, 4, 5, "0.666256"),
       cell(1, 4, 10, "0.691041"),
       cell(1, 4, 15, "0.7001205", "seven significant digits where the table prints six"),
       cell(2, 4, 5, "0.682652"),
       cell(2, 4, 10, "0.698824"),
       cell(2, 4, 15, "0.705261"),
      }});
  tables.push_back({"R11", LiteralTag::R11eq, "Computation of $R_{11}^{m,N}$", {true, true, false},
      {
       cell(1, 1, 5, "0.171125"),
       cell(1, 1, 10, "0.171573"),
       cell(1, 1, 15, "0.171573"),
       cell(1, 2, 5, "0.372068"),
       cell(1, 2, 10, "0.412677"),
       cell(1, 2, 15, "0.414185"),
       cell(1, 3, 5, "0.432697"),
       cell(1, 3, 10, "0.531244"),
       cell(1, 3, 15, "0.553009"),
       cell(1, 4, 5, "0.453269"),
       cell(1, 4, 10, "0.576975"),
       cell(1, 4, 15, "0.624641"),
      }});
  tables.push_back({"R12", LiteralTag::R12eq, "Values of $R_{12}^{m}$", {true, false, false},
      {
       cell(1, 1, 1, "0.14813"),
       cell(1, 2, 1, "0.26795"),
       cell(1, 3, 1, "0.30200"),
       cell(1, 4, 1, "0.31270"),
      }});
  tables.push_back({"R13", LiteralTag::R13eq, "The values of $R_{13}^{m}$", {true, false, false},
      {
       cell(1, 1, 1, "0.164662"),
       cell(1, 2, 1, "0.322256"),
       cell(1, 3, 1, "0.369627"),
       cell(1, 4, 1, "0.386157"),
      }});
  tables.push_back({"R14", LiteralTag::R14eq, "Values of $R_{14}^{m,N}$", {true, true, false},
      {
       cell(1, 1, 5, "0.330697"),
       cell(1, 1, 10, "0.333322"),
       cell(1, 1, 15, "0.333333"),
       cell(1, 2, 5, "0.536482"),
       cell(1, 2, 10, "0.573823"),
       cell(1, 2, 15, "0.577111"),
       cell(1, 3, 5, "0.607547"),
       cell(1, 3, 10, "0.673834"),
       cell(1, 3, 15, "0.689549"),
       cell(1, 4, 5, "0.640031"),
       cell(1, 4, 10, "0.719763"),
       cell(1, 4, 15, "0.746595"),
      }});
  tables.push_back({"R15", LiteralTag::R15eq, "Computation of $R_{15}^{m}$", {true, false, false},
      {
       cell(1, 1, 1, "0.28990"),
       cell(1, 2, 1, "0.44721"),
       cell(1, 3, 1, "0.50845"),
       cell(1, 4, 1, "0.53842"),
      }});
  tables.push_back({"R16", LiteralTag::R16eq, "The roots $R_{16}^{m}$", {true, false, false},
      {
       cell(1, 1, 1, "0.21525"),
       cell(1, 2, 1, "0.33333"),
       cell(1, 3, 1, "0.37893"),
       cell(1, 4, 1, "0.39871"),
      }});
  return tables;
}

}  // namespace

const std::vector<TableSpec>& golden_tables() {
  static const std::vector<TableSpec> tables = build_tables();
  return tables;
}

const TableSpec* find_table(std::string_view id) {
  for (const auto& t : golden_tables())
    if (t.id == id) return &t;
  return nullptr;
}

RadiusProblem canonical_problem(LiteralTag tag, const LiteralParams& params) {
  RadiusProblem problem;
  problem.theorem = theorem_of(tag);
  problem.p = params.p;
  problem.m = ArgumentPower(params.m);
  const int N = params.N;
  switch (tag) {
    case LiteralTag::R1eq: problem.family = WeightFamily::power(N); break;
    case LiteralTag::R2eq: problem.family = WeightFamily::even_power(1); break;
    case LiteralTag::R3eq: problem.family = WeightFamily::odd_power(1); break;
    case LiteralTag::R4eq: problem.family = WeightFamily::affine(N); break;
    case LiteralTag::R5eq: problem.family = WeightFamily::linear(N); break;
    case LiteralTag::R6eq: problem.family = WeightFamily::quadratic(N); break;
    case LiteralTag::R7eq:
      // |f(z)| + sum |a_{kn}| r^{kn}: m = 1, p = 1, weights on multiples of n.
      problem.family = WeightFamily::strided_power(N, 1);
      problem.m = ArgumentPower(1);
      problem.p = 1.0;
      break;
    case LiteralTag::R8eq: problem.family = WeightFamily::power(N); break;
    case LiteralTag::R9eq: problem.family = WeightFamily::even_power(N); break;
    case LiteralTag::R10eq: problem.family = WeightFamily::odd_power(N); break;
    case LiteralTag::R11eq: problem.family = WeightFamily::power(N); break;
    case LiteralTag::R12eq: problem.family = WeightFamily::even_power(1); break;
    case LiteralTag::R13eq: problem.family = WeightFamily::odd_power(1); break;
    case LiteralTag::R14eq: problem.family = WeightFamily::power(N); break;
    case LiteralTag::R15eq: problem.family = WeightFamily::even_power(1); break;
    case LiteralTag::R16eq: problem.family = WeightFamily::odd_power(1); break;
  }
  if (problem.theorem == Theorem::T1 && problem.p > 1.0) problem.allow_extended_p = true;
  validate(problem);
  return problem;
}

RadiusProblem literal_problem(LiteralTag tag, const LiteralParams& params) {
  RadiusProblem problem = canonical_problem(tag, params);
  problem.literal = tag;
  if (tag == LiteralTag::R7eq) problem.p = params.p;
  validate(problem);
  return problem;
}

std::string CatalogEntry::label() const {
  std::ostringstream os;
  os << table_id << "[m=" << params.m << ",N=" << params.N << ",p=" << params.p << "]";
  return os.str();
}

std::vector<CatalogEntry> catalog_problems() {
  std::vector<CatalogEntry> out;
  for (const auto& table : golden_tables())
    for (const auto& c : table.cells)
      out.push_back({table.id, table.tag, c.params, canonical_problem(table.tag, c.params)});
  return out;
}

}  // namespace bohr
