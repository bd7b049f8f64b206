#include "quadent/catalog.hpp"

namespace quadent {

namespace {

const Direction PP{1, 1}, PM{1, -1}, MP{-1, 1}, MM{-1, -1};

// (1-s)^3
const std::vector<long> kCube{1, -3, 3, -1};
// (1-s)^3 (1+s)
const std::vector<long> kCubeTimesOnePlus{1, -2, 0, 2, -1};
// (1-s)^3 (1+s+s^2)^2
const std::vector<long> kBoussinesqDen{1, -1, 0, -2, 2, 0, 1, -1};

// k(k+1)/2 + 1, k(k+1) + 1 and 3k(k+1)/2 + 1 in ascending powers of k
const std::vector<std::string> kLpkdvForm{"1", "1/2", "1/2"};
const std::vector<std::string> kNlsForm{"1", "1", "1"};
const std::vector<std::string> kLsgForm{"1", "3/2", "3/2"};

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> c;

  {
    CatalogEntry e;
    e.name = "coupled-lpkdv";
    e.title = "Coupled lattice potential KdV system";
    e.source =
        "fields x y\n"
        "params alpha beta\n"
        "(x[0,0] - x[1,1])*(y[1,0] - y[0,1]) - alpha + beta = 0;\n"
        "(y[0,0] - y[1,1])*(x[1,0] - x[0,1]) - alpha + beta = 0;\n";
    e.reference = "Brady & Xenitidis 2022";
    e.admissible = {PP, PM, MP, MM};
    e.isotropy = "strongly isotropic";
    std::vector<long> seq{1, 2, 4, 7, 11, 16, 22, 29, 37};
    for (Direction d : e.admissible) {
      e.expected.push_back({d, {seq, seq}, {{{1, -1, 1}, kCube}, {{1, -1, 1}, kCube}},
                            {kLpkdvForm, kLpkdvForm}, "quadratic"});
    }
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lattice-nls";
    e.title = "Lattice NLS system";
    // Second equation carries +(alpha-beta): this is the sign for which the
    // published degree sequence is reproduced.
    e.source =
        "fields x y\n"
        "params alpha beta\n"
        "x[1,0] - x[0,1] - (alpha - beta)*x[0,0]/(1 + x[0,0]*y[1,1]) = 0;\n"
        "y[1,0] - y[0,1] + (alpha - beta)*y[1,1]/(1 + x[0,0]*y[1,1]) = 0;\n";
    e.reference = "Konstantinou-Rizos et al. 2015";
    e.admissible = {PP, MM};
    e.isotropy = "strongly isotropic";
    std::vector<long> seq{1, 3, 7, 13, 21, 31, 43, 57, 73};
    for (Direction d : e.admissible) {
      e.expected.push_back({d, {seq, seq}, {{{1, 0, 1}, kCube}, {{1, 0, 1}, kCube}},
                            {kNlsForm, kNlsForm}, "quadratic"});
    }
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lsg2";
    e.title = "lSG2 system";
    e.source =
        "fields x y\n"
        "funcs lam1(l) lam2(l) lam3(l)^((-1)^m) mu1(m) mu2(m) mu3(m)^((-1)^l)\n"
        "lam3/mu3*x[0,1]/x[0,0] + lam1*mu1*x[1,1]*y[0,1]\n"
        "  = mu3/lam3*x[1,1]/x[1,0] + lam2*mu2/(x[0,0]*y[1,0]);\n"
        "mu3/lam3*y[1,1]/y[0,1] + lam2*mu2/(x[0,1]*y[0,0])\n"
        "  = lam3/mu3*y[1,0]/y[0,0] + lam1*mu1*x[1,0]*y[1,1];\n";
    e.reference = "Hay 2009";
    e.admissible = {PM, MP};
    e.isotropy = "strongly isotropic";
    std::vector<long> seq{1, 4, 10, 19, 31, 46, 64, 85, 109};
    for (Direction d : e.admissible) {
      e.expected.push_back({d, {seq, seq}, {{{1, 1, 1}, kCube}, {{1, 1, 1}, kCube}},
                            {kLsgForm, kLsgForm}, "quadratic"});
    }
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "lmkdv2";
    e.title = "lmKdV2 system";
    e.source =
        "fields x y\n"
        "funcs lam1(l) lam2(l) lam3(l)^((-1)^m) mu1(m) mu2(m) mu3(m)^((-1)^l)\n"
        "lam1/mu3*x[1,1]/x[0,1] + mu2/lam3*y[0,0]/y[0,1]\n"
        "  = lam2*mu3*y[0,0]/y[1,0] + lam3*mu1*x[1,1]/x[1,0];\n"
        "lam3*mu1*x[0,1]*y[1,1] + lam2*mu3*x[0,0]*y[0,1]\n"
        "  = mu2/lam3*x[0,0]*y[1,0] + lam1/mu3*x[1,0]*y[1,1];\n";
    e.reference = "Hay 2009";
    e.admissible = {PM, MP};
    e.isotropy = "permutationally isotropic";
    std::vector<long> sx{1, 4, 8, 15, 23, 34, 46, 61, 77};
    std::vector<long> sy{1, 2, 6, 11, 19, 28, 40, 53, 69};
    ExpectedFit fx{{1, 2, 0, 1}, kCubeTimesOnePlus}, fy{{1, 0, 2, 1}, kCubeTimesOnePlus};
    e.expected.push_back({MP, {sx, sy}, {fx, fy}, {}, "quadratic"});
    e.expected.push_back({PM, {sy, sx}, {fy, fx}, {}, "quadratic"});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "boussinesq";
    e.title = "Boussinesq system";
    e.source =
        "fields x y z\n"
        "params p q\n"
        "z[1,0] - x[0,0]*x[1,0] + y[0,0] = 0;\n"
        "z[0,1] - x[0,0]*x[0,1] + y[0,0] = 0;\n"
        "(x[0,1] - x[1,0])*(z[0,0] - x[0,0]*x[1,1] + y[1,1]) - p + q = 0;\n";
    e.reference = "Nijhoff et al. 1992";
    e.admissible = {PM};
    e.isotropy = "not applicable";
    e.steps = 26;
    e.expected.push_back(
        {PM,
         {{1, 2, 4, 7, 14, 21, 30, 43, 55, 70, 89, 106, 127, 152, 174, 201, 232},
          {1, 2, 4, 9, 14, 21, 32, 43, 55, 72, 89, 106, 129, 152, 174, 203, 232},
          {1, 3, 5, 8, 15, 22, 32, 44, 56, 73, 90, 107, 131, 153, 175, 206, 233}},
         {{{1, 1, 2, 1, 5, 3, 4}, kBoussinesqDen},
          {{1, 1, 2, 3, 3, 3, 2, 2}, kBoussinesqDen},
          {{1, 2, 2, 1, 3, 3, 5}, kBoussinesqDen}},
         {},
         "quadratic"});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "schwarzian-boussinesq";
    e.title = "Schwarzian Boussinesq system";
    e.source =
        "fields x y z\n"
        "params p q\n"
        "x[1,0]*y[0,0] = z[1,0] - z[0,0];\n"
        "x[0,1]*y[0,0] = z[0,1] - z[0,0];\n"
        "x[0,0]*y[1,1]*(y[1,0] - y[0,1]) = y[0,0]*(p*x[1,0]*y[0,1] - q*x[0,1]*y[1,0]);\n";
    e.reference = "Nijhoff 1996";
    e.admissible = {PM};
    e.isotropy = "not applicable";
    e.steps = 26;
    std::vector<long> sx{1, 4, 8, 12, 23, 34, 43, 62, 80, 94, 121, 146, 165, 200, 232, 256};
    std::vector<long> syz{1, 2, 7, 12, 19, 32, 43, 56, 77, 94, 113, 142, 165, 190, 227, 256};
    ExpectedFit fx{{1, 3, 4, 2, 5, 3, 2}, kBoussinesqDen}, fyz{{1, 1, 5, 3, 5, 3, 2}, kBoussinesqDen};
    e.expected.push_back({PM, {sx, syz, syz}, {fx, fyz, fyz}, {}, "quadratic"});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "mod-boussinesq";
    e.title = "Modified Boussinesq system";
    // Second equation pairs p with x[0,1]*y[1,0] and q with x[1,0]*y[0,1];
    // with this coupling every direction is rational and the published
    // generating functions are reproduced.
    e.source =
        "fields x y\n"
        "params p q\n"
        "x[1,1]*(p*y[1,0] - q*y[0,1]) = y[0,0]*(p*x[0,1] - q*x[1,0]);\n"
        "x[0,0]*y[1,1]*(p*y[1,0] - q*y[0,1]) = y[0,0]*(p*x[0,1]*y[1,0] - q*x[1,0]*y[0,1]);\n";
    e.reference = "Xenitidis & Nijhoff 2012";
    e.admissible = {PP, PM, MP, MM};
    e.isotropy = "permutationally isotropic";
    e.steps = 26;
    // Published (+,-) lists and numerators; the lists coincide with the
    // Schwarzian Boussinesq ones while the numerators expand to
    // 1,2,6,11,17,... and 1,3,7,11,19,...
    std::vector<long> sx{1, 4, 8, 12, 23, 34, 43, 62, 80, 94, 121, 146, 165, 200, 232, 256};
    std::vector<long> sy{1, 2, 7, 12, 19, 32, 43, 56, 77, 94, 113, 142, 165, 190, 227, 256};
    ExpectedFit fx{{1, 1, 4, 3, 4, 2, 1}, kBoussinesqDen}, fy{{1, 2, 4, 2, 4, 2, 1}, kBoussinesqDen};
    e.expected.push_back({PM, {sx, sy}, {fx, fy}, {}, "quadratic"});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "aug-schwarzian-boussinesq";
    e.title = "Augmented Schwarzian Boussinesq system";
    e.source =
        "fields x y z\n"
        "params p q\n"
        "x[1,1]*y[0,1] = z[1,1] - z[0,1];\n"
        "x[1,1]*y[1,0] = z[1,1] - z[1,0];\n"
        "x[0,0]*y[1,1]*(y[1,0] - y[0,1]) = y[0,0]*(p*x[1,0]*y[0,1] - q*x[0,1]*y[1,0]);\n";
    e.reference = "Bridgman et al. 2013 (augmentation)";
    e.admissible = {MP, PP, MM};
    e.isotropy = "anisotropic";
    e.steps = 26;
    e.expected.push_back({MP, {}, {}, {}, "quadratic"});
    e.expected.push_back({PP, {}, {}, {}, "linear"});
    e.expected.push_back({MM, {}, {}, {}, "linear"});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "toy-algebraic";
    e.title = "Two-component example with algebraic and rational branches";
    // Corners 1..4 of the quad are x[0,0], x[0,1], x[1,1], x[1,0].
    e.source =
        "fields x y\n"
        "x[0,0]*y[0,0]*y[0,1]*x[1,1] - x[0,1]*y[1,1]*y[1,0]*x[1,0] = 0;\n"
        "x[0,0]*y[0,1] + y[1,1]*x[1,0] + y[0,0]*x[0,1] + x[1,1]*y[1,0] = 0;\n";
    e.reference = "illustrative example";
    // The (x[0,1], y[0,1]) pair is rational too, with exponential growth.
    e.admissible = {PP, MP};
    e.algebraic = {PM};
    e.isotropy = "isotropic";
    e.steps = 8;
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "scalar-h1";
    e.title = "Lattice potential KdV equation (H1)";
    e.source =
        "fields x\n"
        "params alpha beta\n"
        "(x[0,0] - x[1,1])*(x[1,0] - x[0,1]) - alpha + beta = 0;\n";
    e.reference = "Adler, Bobenko & Suris 2003";
    e.admissible = {PP, PM, MP, MM};
    e.isotropy = "strongly isotropic";
    std::vector<long> seq{1, 2, 4, 7, 11, 16, 22, 29, 37};
    for (Direction d : e.admissible) e.expected.push_back({d, {seq}, {{{1, -1, 1}, kCube}}, {kLpkdvForm}, "quadratic"});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "scalar-lsg";
    e.title = "Lattice sine-Gordon equation";
    e.source =
        "fields x\n"
        "params p r\n"
        "x[0,0]*x[1,0]*x[0,1]*x[1,1] = p*(x[0,0]*x[1,1] - x[1,0]*x[0,1]) + r;\n";
    e.reference = "Quispel & Capel 1991; Orfanidis 1980";
    e.admissible = {PP, PM, MP, MM};
    e.isotropy = "strongly isotropic";
    std::vector<long> seq{1, 3, 7, 13, 21, 31, 43, 57, 73};
    for (Direction d : e.admissible) e.expected.push_back({d, {seq}, {{{1, 0, 1}, kCube}}, {kNlsForm}, "quadratic"});
    c.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "scalar-lmkdv";
    e.title = "Lattice modified KdV equation";
    e.source =
        "fields x\n"
        "params p r\n"
        "x[1,1]*(p*x[0,1] - r*x[1,0]) = x[0,0]*(p*x[1,0] - r*x[0,1]);\n";
    e.reference = "Nijhoff & Capel 1995";
    e.admissible = {PP, PM, MP, MM};
    e.isotropy = "strongly isotropic";
    std::vector<long> seq{1, 2, 4, 7, 11, 16, 22, 29, 37};
    for (Direction d : e.admissible) e.expected.push_back({d, {seq}, {{{1, -1, 1}, kCube}}, {kLpkdvForm}, "quadratic"});
    c.push_back(e);
  }
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace quadent
