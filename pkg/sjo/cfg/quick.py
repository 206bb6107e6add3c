import sjo

__all__ = ['params']


# Smoke run, every claim with a handful of samples
params = sjo.verify.SuiteParameters(
    seed = 0,
    samples = 3,
    trunc = 30,
    pole_distance = 1e-3,
)
