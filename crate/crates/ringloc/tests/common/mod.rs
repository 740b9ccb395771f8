/// Fifty expressions with assorted spacing, line breaks and argument orders.
pub const ROUND_TRIP: [&str; 50] = [
    "zmod(2)",
    "zmod(12)",
    " zmod ( 16 ) ",
    "gf(2)",
    "gf(3)",
    "gf(4)",
    "gf(8)",
    "gf(9)",
    "mat(2, gf(2))",
    "mat(2,zmod(2))",
    "tri(2, gf(2))",
    "tri(2, gf(3))",
    "tri(2, zmod(4))",
    "tri(3, gf(2))",
    "prod(zmod(2), gf(3))",
    "prod(gf(2), prod(gf(2), gf(2)))",
    "prod(prod(zmod(2), zmod(3)), zmod(5))",
    "prod(tri(2, gf(2)), zmod(2))",
    "prod(mat(2, gf(2)), gf(2))",
    "quot(zmod(12), gens=[6])",
    "quot(zmod(12), gens=[4, 6])",
    "quot(zmod(16), gens=[])",
    "quot(prod(zmod(2), zmod(2)), gens=[1])",
    "quot(tri(2, gf(2)), gens=[1])",
    "quot(quot(zmod(16), gens=[8]), gens=[4])",
    "quot(\n  prod(zmod(4), gf(2)),\n  gens=[2]\n)",
    "mono(vars=2, gens=[v1*v2])",
    "mono(vars=1, gens=[v1])",
    "mono(vars=3, gens=[])",
    "mono(gens=[v1*v2, v2*v3], vars=3)",
    "mono(vars=3, gens=[v1^2*v2, v2*v3^2])",
    "mono(vars=2, gens=[v1^2, v1*v2])",
    "mono(vars=4, gens=[v1*v2, v3*v4])",
    "mono(vars=3, gens=[y1*z2, x3])",
    "mono(vars=2, gens=[v2*v1])",
    "mono(vars=2, gens=[v1*v1])",
    "mono(vars = 3 , gens = [ v1 * v2 * v3 ])",
    "mono(vars=1)",
    "an(n=1)",
    "an(n=2)",
    "an(n=3)",
    "an(n=0)",
    "an(n=2, extra=2)",
    "an(n=1, degree=4)",
    "an(degree=5, n=2, extra=1)",
    "an(n=3,extra=2,degree=7)",
    "mat(2, quot(zmod(4), gens=[2]))",
    "prod(an(n=1), zmod(2))",
    "tri(2, prod(gf(2), gf(2)))",
    "prod(quot(zmod(9), gens=[3]), gf(4))",
];
