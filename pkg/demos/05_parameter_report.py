"""How the planner's choices scale.

s is a product of cyclotomic values at p, so s/N falls toward 1 while the
extension degree d grows only polylogarithmically. The report table makes
the near-linear cost shape visible at desk scale.
"""

from padicfft import asymptotic_report, choose_parameters, report_table

print("p = 3, growing N:")
rows = asymptotic_report(3, [10, 100, 1000, 10**4, 10**5, 10**6])
print(report_table(rows))

# the first planner step beyond N uses the first r primes q = 2, 3, 5, ...
# as Phi_q(3) factors; watch r grow slowly
for N in (10, 100, 1000, 10**4, 10**5, 10**6):
    res = choose_parameters(3, N)
    qs = " * ".join(f"{q}^{v}" if v > 1 else str(q) for q, v in res.s_factored.factors)
    print(f"N={N:>8}: r={res.r}, s={res.s} = {qs}, d={res.d}")

print()
print("other primes, N = 10^5:")
print(report_table(asymptotic_report(5, [10**5])))
print(report_table(asymptotic_report(7, [10**5])))
