"""Extended-precision q-Pochhammer evaluation, asymptotic expansions and truncation sweeps."""
