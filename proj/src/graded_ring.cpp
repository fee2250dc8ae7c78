#include "monopole/graded_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace monopole {

RingPresentation::RingPresentation(int modulus, std::vector<RingGenerator> gens)
    : modulus_(modulus), gens_(std::move(gens))
{
    if (modulus_ != 0 && modulus_ != 2)
        throw std::invalid_argument("coefficient modulus must be 0 or 2");
    for (const auto& g : gens_) {
        if (g.degree < 0 || g.nilpotency < 0)
            throw std::invalid_argument("bad generator data for " + g.name);
        if (g.annihilator != 0 && g.annihilator != 2)
            throw std::invalid_argument("generator annihilator must be 0 or 2");
        if (modulus_ == 0 && g.degree % 2 != 0)
            throw std::invalid_argument(
                "integral presentations require even generator degrees (" + g.name + ")");
    }
}

std::shared_ptr<const RingPresentation> RingPresentation::adjoined(RingGenerator g) const
{
    auto gens = gens_;
    gens.push_back(std::move(g));
    return std::make_shared<const RingPresentation>(modulus_, std::move(gens));
}

PresentationPtr make_presentation(int modulus, std::vector<RingGenerator> gens)
{
    return std::make_shared<const RingPresentation>(modulus, std::move(gens));
}

GradedClass::GradedClass(PresentationPtr pres) : pres_(std::move(pres))
{
    if (!pres_)
        throw std::invalid_argument("null presentation");
}

GradedClass GradedClass::scalar(PresentationPtr pres, Int value)
{
    GradedClass r(std::move(pres));
    r.add_reduced(std::vector<int>(r.pres_->arity(), 0), value);
    return r;
}

GradedClass GradedClass::generator(PresentationPtr pres, std::size_t index, int power)
{
    GradedClass r(std::move(pres));
    if (index >= r.pres_->arity())
        throw std::invalid_argument("generator index out of range");
    std::vector<int> exps(r.pres_->arity(), 0);
    exps[index] = power;
    r.add_reduced(exps, Int(1));
    return r;
}

GradedClass GradedClass::monomial(PresentationPtr pres, std::vector<int> exps, Int coeff)
{
    GradedClass r(std::move(pres));
    if (exps.size() != r.pres_->arity())
        throw std::invalid_argument("exponent vector has wrong arity");
    r.add_reduced(exps, coeff);
    return r;
}

bool GradedClass::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           monomial_degree(terms_.begin()->first) == 0;
}

void GradedClass::add_reduced(const std::vector<int>& exps, const Int& coeff)
{
    const auto& gens = pres_->gens();
    bool torsion2 = pres_->modulus() == 2;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (exps[i] < 0)
            throw std::invalid_argument("negative exponent");
        if (gens[i].nilpotency > 0 && exps[i] >= gens[i].nilpotency)
            return;
        if (exps[i] > 0 && gens[i].annihilator == 2)
            torsion2 = true;
    }
    auto it = terms_.find(exps);
    if (it == terms_.end())
        it = terms_.emplace(exps, Int(0)).first;
    it->second += coeff;
    if (torsion2) {
        it->second %= 2;
        if (it->second < 0)
            it->second += 2;
    }
    if (it->second == 0)
        terms_.erase(it);
}

void GradedClass::check_same_ring(const GradedClass& o) const
{
    if (pres_ != o.pres_ && !(*pres_ == *o.pres_))
        throw std::domain_error("graded classes live in different presentations");
}

int GradedClass::monomial_degree(const std::vector<int>& exps) const
{
    int d = 0;
    const auto& gens = pres_->gens();
    for (std::size_t i = 0; i < exps.size(); ++i)
        d += exps[i] * gens[i].degree;
    return d;
}

std::optional<int> GradedClass::homogeneous_degree() const
{
    std::optional<int> d;
    for (const auto& [exps, c] : terms_) {
        int md = monomial_degree(exps);
        if (!d)
            d = md;
        else if (*d != md)
            return std::nullopt;
    }
    return d;
}

GradedClass GradedClass::component(int degree) const
{
    GradedClass r(pres_);
    for (const auto& [exps, c] : terms_)
        if (monomial_degree(exps) == degree)
            r.terms_.emplace(exps, c);
    return r;
}

GradedClass GradedClass::operator-() const
{
    GradedClass r(pres_);
    for (const auto& [exps, c] : terms_)
        r.add_reduced(exps, -c);
    return r;
}

GradedClass& GradedClass::operator+=(const GradedClass& o)
{
    check_same_ring(o);
    for (const auto& [exps, c] : o.terms_)
        add_reduced(exps, c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o)
{
    check_same_ring(o);
    for (const auto& [exps, c] : o.terms_)
        add_reduced(exps, -c);
    return *this;
}

GradedClass& GradedClass::operator*=(const Int& s)
{
    GradedClass r(pres_);
    for (const auto& [exps, c] : terms_)
        r.add_reduced(exps, c * s);
    *this = std::move(r);
    return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b)
{
    a.check_same_ring(b);
    GradedClass r(a.pres_);
    std::vector<int> exps(a.pres_->arity());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i)
                exps[i] = ea[i] + eb[i];
            r.add_reduced(exps, ca * cb);
        }
    return r;
}

bool GradedClass::operator==(const GradedClass& o) const
{
    return (pres_ == o.pres_ || *pres_ == *o.pres_) && terms_ == o.terms_;
}

GradedClass GradedClass::lifted(PresentationPtr larger) const
{
    if (larger->modulus() != pres_->modulus() || larger->arity() < pres_->arity())
        throw std::domain_error("not an extension of the source presentation");
    for (std::size_t i = 0; i < pres_->arity(); ++i)
        if (!(larger->gens()[i] == pres_->gens()[i]))
            throw std::domain_error("not an extension of the source presentation");
    GradedClass r(larger);
    for (const auto& [exps, c] : terms_) {
        std::vector<int> e = exps;
        e.resize(larger->arity(), 0);
        r.add_reduced(e, c);
    }
    return r;
}

GradedClass GradedClass::pow(unsigned long long n) const
{
    GradedClass acc = GradedClass::scalar(pres_, 1);
    GradedClass base(*this);
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return acc;
}

std::string GradedClass::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    const auto& gens = pres_->gens();
    for (const auto& [exps, c] : terms_) {
        std::ostringstream mono;
        bool unit_monomial = true;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0)
                continue;
            if (!unit_monomial)
                mono << "*";
            mono << gens[i].name;
            if (exps[i] > 1)
                mono << "^" << exps[i];
            unit_monomial = false;
        }
        if (!first)
            os << " + ";
        if (unit_monomial)
            os << c;
        else if (c == 1)
            os << mono.str();
        else if (c == -1)
            os << "-" << mono.str();
        else
            os << c << "*" << mono.str();
        first = false;
    }
    return os.str();
}

}  // namespace monopole
