#include "cliffleg/clifford.hpp"

namespace cliffleg {

SignedBlade blade_product(Blade a, Blade b, int m)
{
    check_dimension(m);
    if (!a.valid_for(m) || !b.valid_for(m))
        throw std::invalid_argument("blade outside R_" + std::to_string(m));
    return blade_product(a, b);
}

std::string blade_name(Blade a)
{
    if (a.mask == 0)
        return "1";
    std::string name = "e";
    for (int j = 1; j <= max_dimension; ++j)
        if (a.mask & Blade::generator(j).mask)
            name += std::to_string(j);
    return name;
}

Multivector<double> to_double(const Multivector<Rational>& u)
{
    Multivector<double> r(u.dimension());
    for (std::uint32_t a = 0; a < u.size(); ++a)
        r[Blade{a}] = u[Blade{a}].get_d();
    return r;
}

double norm_sq(const ComplexMultivector& u)
{
    return norm_sq(u.re) + norm_sq(u.im);
}

} // namespace cliffleg
