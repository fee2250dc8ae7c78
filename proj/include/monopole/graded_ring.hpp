#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monopole/numeric.hpp"

namespace monopole {

struct RingGenerator {
    std::string name;
    int degree = 0;
    int nilpotency = 0;   // smallest vanishing power; 0 means unbounded
    int annihilator = 0;  // 0, or 2 when the generator's multiples are 2-torsion

    bool operator==(const RingGenerator&) const = default;
};

// Explicitly presented truncated graded-commutative ring.  Admissible
// presentations are either mod-2, or integral with all generator degrees
// even; this keeps multiplication honestly commutative.
class RingPresentation {
public:
    RingPresentation(int modulus, std::vector<RingGenerator> gens);

    int modulus() const { return modulus_; }
    const std::vector<RingGenerator>& gens() const { return gens_; }
    std::size_t arity() const { return gens_.size(); }

    std::shared_ptr<const RingPresentation> adjoined(RingGenerator g) const;

    bool operator==(const RingPresentation&) const = default;

private:
    int modulus_;
    std::vector<RingGenerator> gens_;
};

using PresentationPtr = std::shared_ptr<const RingPresentation>;

PresentationPtr make_presentation(int modulus, std::vector<RingGenerator> gens);

// Element of a presented ring: monomial exponent vector -> coefficient, fully
// reduced against nilpotency and torsion rules, no stored zeros.
class GradedClass {
public:
    explicit GradedClass(PresentationPtr pres);

    static GradedClass scalar(PresentationPtr pres, Int value);
    static GradedClass generator(PresentationPtr pres, std::size_t index, int power = 1);
    static GradedClass monomial(PresentationPtr pres, std::vector<int> exps, Int coeff);

    const PresentationPtr& presentation() const { return pres_; }
    const std::map<std::vector<int>, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    int monomial_degree(const std::vector<int>& exps) const;
    std::optional<int> homogeneous_degree() const;
    GradedClass component(int degree) const;

    GradedClass operator-() const;
    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    GradedClass& operator*=(const Int& s);
    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator*(GradedClass a, const Int& s) { return a *= s; }

    bool operator==(const GradedClass& o) const;
    bool operator!=(const GradedClass& o) const { return !(*this == o); }

    // Re-express in a presentation extending this one by extra trailing
    // generators (exponent vectors are padded with zeros).
    GradedClass lifted(PresentationPtr larger) const;

    GradedClass pow(unsigned long long n) const;

    std::string str() const;

private:
    PresentationPtr pres_;
    std::map<std::vector<int>, Int> terms_;

    void add_reduced(const std::vector<int>& exps, const Int& coeff);
    void check_same_ring(const GradedClass& o) const;
};

}  // namespace monopole
