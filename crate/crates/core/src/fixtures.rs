//! Problem texts shared across unit tests: the two systems worked through
//! in the degree analysis, in their generic and degenerate variants.

pub(crate) const EXAMPLE_1: &str =
    "f = (x^2)*y^4 + (x^2)*y^3 + (x^4)*y^2 + (x^5)*y + (x^5)\n\
     theta = (x^8)*y^5 + (x^6)*y^4 + (x^9)*y^3 + (x^4)*y^2 + (x^3)*y + (x^4)";

pub(crate) const EXAMPLE_2_GENERIC: &str =
    "f = #*y^4 + #*x^2*y^4 + #*y^2 + #*x*y^2 + #*x^3*y + # + #*x^2 + #*x^3\n\
     theta = #*x^5*y^2 + #*y + #*x^2*y + # + #*x^4";

pub(crate) const EXAMPLE_2_DEGENERATE: &str =
    "f = #*x^2*y^4 + #*y^2 + #*x*y^2 + #*x^3*y + # + #*x^2\n\
     theta = #*x^5*y^2 + #*y + #*x^2*y + # + #*x^4";
