import sjo

__all__ = ['params']


params = sjo.verify.SuiteParameters(
    seed = 0,
    samples = 20,
    trunc = 50,
    pole_distance = 1e-3,
)
