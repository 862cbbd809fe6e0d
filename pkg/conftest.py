import inspect

# numpy.testing probes the CPU with a subprocess on first import. Import it before unit tests disable subprocesses.
import numpy.testing  # pylint: disable=unused-import
# hypothesis imports its optimiser lazily mid-test; pytest's assertion rewriter would then call the disabled os.makedirs.
import hypothesis.internal.conjecture.optimiser  # pylint: disable=unused-import


def pytest_pycollect_makeitem(collector, name, obj):
    # genty calls functools.update_wrapper(func, func) for methods without datasets, leaving func.__wrapped__ pointing
    # at itself. pytest's inspect.unwrap() then fails with "wrapper loop", so drop those self-references.
    if inspect.isclass(obj):
        for attribute in vars(obj).values():
            if inspect.isfunction(attribute) and attribute.__dict__.get('__wrapped__') is attribute:
                del attribute.__wrapped__
