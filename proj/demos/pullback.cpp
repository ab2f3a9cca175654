// Pull a random foliation of P^2 back to P^4 along a random linear
// projection, check that the result is an integrable twisted 1-form, and
// recover the original form from it.
#include "lpb/lpb.hpp"

#include <iostream>

int main()
{
    const lpb::ProjectiveOneForm omega = lpb::random_form(2, 1, 7);
    const lpb::LinearProjection f = lpb::random_projection(4, 11);
    const lpb::ProjectiveOneForm mu = lpb::pullback_linear(f, omega);

    std::cout << "omega   = " << omega.to_string() << "\n";
    std::cout << "F^*omega has contraction " << lpb::contract_radial(mu).to_string() << " and is "
              << (lpb::is_integrable(mu) ? "integrable" : "NOT integrable") << "\n";

    const auto back = lpb::recover(f, mu);
    std::cout << "recovered omega " << (back && *back == omega ? "matches" : "differs") << "\n";
    return back && *back == omega ? 0 : 1;
}
