# Independent height oracle: h(2^k P) / 4^k with exact gmpy2 doubling on
# Y^2 = X^3 + b. The limit error is at most gap / 4^k.
import math, sys
from gmpy2 import mpq, mpz

def double(x, y, b):
    lam = 3 * x * x / (2 * y)
    x2 = lam * lam - 2 * x
    return x2, lam * (x - x2) - y

def naive(x):
    n, d = abs(x.numerator), x.denominator
    return math.log(max(n, d)) if max(n, d).bit_length() < 1000 else \
        float(max(n, d).bit_length() - 900) * math.log(2) + math.log(max(n, d) >> (max(n, d).bit_length() - 900))

def limit(x, y, b, k):
    x, y = mpq(x), mpq(y)
    for _ in range(k):
        x, y = double(x, y, b)
    return naive(x) / 4 ** k

if __name__ == "__main__":
    for m, x, y, fam in [(6, 28, 80, "E"), (6, -8, 8, "Ep"), (20, 84, 648, "E")]:
        b = -432 * m * m if fam == "E" else 16 * m * m
        print(m, fam, (x, y), "%.10f" % limit(x, y, b, int(sys.argv[1]) if len(sys.argv) > 1 else 10))
