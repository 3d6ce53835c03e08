#include "pcalg/chains.hpp"

#include "pcalg/an_roots.hpp"

namespace pcalg {

namespace {

struct PolyBuilder {
    const LieAlgebraSpec& spec;
    Polynomial poly;

    explicit PolyBuilder(const LieAlgebraSpec& s) : spec(s), poly(s.dim()) {}

    PolyBuilder& term(const char* coeff, std::initializer_list<const char*> vars) {
        std::vector<int> idx;
        for (const char* v : vars) {
            int i = spec.index_of(v);
            if (i < 0) throw lie_error(std::string("unknown coordinate ") + v);
            idx.push_back(i);
        }
        poly += Polynomial::monomial(spec.dim(), idx, Scalar::parse(coeff));
        return *this;
    }
};

GeneratorSet elliott_generators(const LieAlgebraSpec& su3) {
    // so(3)-invariant generators of the Elliott chain, degrees 2,2,3,3,4,6
    GeneratorSet set;
    set.max_degree = 6;

    PolyBuilder m1(su3);
    m1.term("1", {"l0", "l0"}).term("-2", {"lm1", "lp1"});

    PolyBuilder m2(su3);
    m2.term("1", {"j0", "j0"}).term("-9/8", {"jm1", "jp1"}).term("9/2", {"jm2", "jp2"});

    PolyBuilder m3(su3);
    m3.term("1", {"l0", "l0", "j0"})
        .term("1", {"lm1", "lp1", "j0"})
        .term("-3/4*r3", {"l0", "lp1", "jm1"})
        .term("3/4*r6", {"lp1", "lp1", "jm2"})
        .term("-3/4*r3", {"l0", "lm1", "jp1"})
        .term("3/4*r6", {"lm1", "lm1", "jp2"});

    PolyBuilder m4(su3);
    m4.term("-16/27", {"j0", "j0", "j0"})
        .term("1", {"j0", "jm1", "jp1"})
        .term("-3/4*r6", {"jm2", "jp1", "jp1"})
        .term("-3/4*r6", {"jm1", "jm1", "jp2"})
        .term("8", {"j0", "jm2", "jp2"});

    PolyBuilder m5(su3);
    m5.term("16/3", {"lm1", "lp1", "j0", "j0"})
        .term("-4/3*r3", {"l0", "lp1", "j0", "jm1"})
        .term("3/2", {"lp1", "lp1", "jm1", "jm1"})
        .term("-8/3*r6", {"lp1", "lp1", "j0", "jm2"})
        .term("-4/3*r3", {"l0", "lm1", "j0", "jp1"})
        .term("1", {"l0", "l0", "jm1", "jp1"})
        .term("-5", {"lm1", "lp1", "jm1", "jp1"})
        .term("6*r2", {"l0", "lp1", "jm2", "jp1"})
        .term("3/2", {"lm1", "lm1", "jp1", "jp1"})
        .term("-8/3*r6", {"lm1", "lm1", "j0", "jp2"})
        .term("6*r2", {"l0", "lm1", "jm1", "jp2"})
        .term("-16", {"l0", "l0", "jm2", "jp2"})
        .term("8", {"lm1", "lp1", "jm2", "jp2"});

    PolyBuilder m6(su3);
    m6.term("1/8*r2", {"l0", "lp1", "lp1", "j0", "jm1", "jm1"})
        .term("-1/32*r6", {"lp1", "lp1", "lp1", "jm1", "jm1", "jm1"})
        .term("-2/3*r3", {"l0", "lp1", "lp1", "j0", "j0", "jm2"})
        .term("1/2", {"lp1", "lp1", "lp1", "j0", "jm1", "jm2"})
        .term("-1/16*r6", {"l0", "l0", "lp1", "jm1", "jm1", "jp1"})
        .term("-1/32*r6", {"lm1", "lp1", "lp1", "jm1", "jm1", "jp1"})
        .term("1", {"l0", "l0", "lp1", "j0", "jm2", "jp1"})
        .term("1/2", {"lm1", "lp1", "lp1", "j0", "jm2", "jp1"})
        .term("1/8*r3", {"l0", "lp1", "lp1", "jm1", "jm2", "jp1"})
        .term("-1/4*r6", {"lp1", "lp1", "lp1", "jm2", "jm2", "jp1"})
        .term("-1/8*r2", {"l0", "lm1", "lm1", "j0", "jp1", "jp1"})
        .term("1/16*r6", {"l0", "l0", "lm1", "jm1", "jp1", "jp1"})
        .term("1/32*r6", {"lm1", "lm1", "lp1", "jm1", "jp1", "jp1"})
        .term("-1/8*r3", {"l0", "l0", "l0", "jm2", "jp1", "jp1"})
        .term("-3/8*r3", {"l0", "lm1", "lp1", "jm2", "jp1", "jp1"})
        .term("1/32*r6", {"lm1", "lm1", "lm1", "jp1", "jp1", "jp1"})
        .term("2/3*r3", {"l0", "lm1", "lm1", "j0", "j0", "jp2"})
        .term("-1", {"l0", "l0", "lm1", "j0", "jm1", "jp2"})
        .term("-1/2", {"lm1", "lm1", "lp1", "j0", "jm1", "jp2"})
        .term("1/8*r3", {"l0", "l0", "l0", "jm1", "jm1", "jp2"})
        .term("3/8*r3", {"l0", "lm1", "lp1", "jm1", "jm1", "jp2"})
        .term("-1/2*r6", {"l0", "l0", "lp1", "jm1", "jm2", "jp2"})
        .term("-1/4*r6", {"lm1", "lp1", "lp1", "jm1", "jm2", "jp2"})
        .term("1*r3", {"l0", "lp1", "lp1", "jm2", "jm2", "jp2"})
        .term("-1/2", {"lm1", "lm1", "lm1", "j0", "jp1", "jp2"})
        .term("-1/8*r3", {"l0", "lm1", "lm1", "jm1", "jp1", "jp2"})
        .term("1/2*r6", {"l0", "l0", "lm1", "jm2", "jp1", "jp2"})
        .term("1/4*r6", {"lm1", "lm1", "lp1", "jm2", "jp1", "jp2"})
        .term("1/4*r6", {"lm1", "lm1", "lm1", "jm1", "jp2", "jp2"})
        .term("-1*r3", {"l0", "lm1", "lm1", "jm2", "jp2", "jp2"});

    set.generators = {Generator{2, "M1", m1.poly}, Generator{2, "M2", m2.poly},
                      Generator{3, "M3", m3.poly}, Generator{3, "M4", m4.poly},
                      Generator{4, "M5", m5.poly}, Generator{6, "M6", m6.poly}};
    return set;
}

GeneratorSet o3sl3_generators(const LieAlgebraSpec& sl3) {
    GeneratorSet set;
    set.max_degree = 3;

    PolyBuilder a1(sl3);
    a1.term("1", {"e13"});

    PolyBuilder a2(sl3);
    a2.term("3", {"e12", "e23"}).term("1", {"h1", "e13"}).term("-1", {"h2", "e13"});

    PolyBuilder a3(sl3);
    a3.term("1", {"h1", "h1"})
        .term("1", {"h2", "h2"})
        .term("1", {"h1", "h2"})
        .term("3", {"e12", "e21"})
        .term("3", {"e23", "e32"})
        .term("3", {"e13", "e31"});

    PolyBuilder a4(sl3);
    a4.term("1", {"e12", "e23", "e23"})
        .term("1", {"h1", "e13", "e23"})
        .term("-1", {"e13", "e13", "e21"});

    PolyBuilder a5(sl3);
    a5.term("1", {"e13", "e13", "e32"})
        .term("1", {"h2", "e12", "e13"})
        .term("-1", {"e12", "e12", "e23"});

    PolyBuilder a6(sl3);
    a6.term("1", {"h1", "h1", "h1"})
        .term("3/2", {"h1", "h1", "h2"})
        .term("-3/2", {"h1", "h2", "h2"})
        .term("9/2", {"h1", "e12", "e21"})
        .term("-9", {"h1", "e23", "e32"})
        .term("9/2", {"h1", "e13", "e31"})
        .term("-1", {"h2", "h2", "h2"})
        .term("27/2", {"e13", "e21", "e32"})
        .term("27/2", {"e12", "e23", "e31"})
        .term("9", {"h2", "e12", "e21"})
        .term("-9/2", {"h2", "e23", "e32"})
        .term("-9/2", {"h2", "e13", "e31"});

    set.generators = {Generator{1, "A1", a1.poly}, Generator{2, "A2", a2.poly},
                      Generator{2, "A3", a3.poly}, Generator{3, "A4", a4.poly},
                      Generator{3, "A5", a5.poly}, Generator{3, "A6", a6.poly}};
    return set;
}

} // namespace

Chain make_chain(const std::string& name) {
    if (name == "elliott") {
        Chain c{name, make_su3_elliott(), "so3", {}};
        c.gens = elliott_generators(c.spec);
        return c;
    }
    if (name == "elliott-B") {
        Chain c = make_chain("elliott");
        c.name = name;
        c.gens = rebase_generators(c.gens, "elliott-B");
        return c;
    }
    if (name == "o3sl3") {
        Chain c{name, make_sl(3), "o3", {}};
        c.gens = o3sl3_generators(c.spec);
        return c;
    }
    if (name == "cartan-sl3") {
        Chain c{name, make_sl(3), "cartan", {}};
        c.gens = enumerate_cartan_generators(c.spec, 2);
        return c;
    }
    if (name == "racah-cfg") {
        Chain c = make_chain("cartan-sl3");
        c.name = name;
        c.gens = rebase_generators(c.gens, "racah-cfg");
        return c;
    }
    if (name == "cartan-sl4") {
        Chain c{name, make_sl(4), "cartan", {}};
        c.gens = enumerate_cartan_generators(c.spec, 3);
        return c;
    }
    throw lie_error("unknown chain: " + name);
}

std::vector<std::string> chain_names() {
    return {"elliott", "elliott-B", "o3sl3", "cartan-sl3", "racah-cfg", "cartan-sl4"};
}

} // namespace pcalg
