import functools


def memoize(fn):
    """Cache results on the first argument's instance dict, keyed by the remaining args.

    Works with frozen ``eq=False`` dataclasses; the cache dies with the object.
    """
    key = f"_memo_{fn.__module__}_{fn.__qualname__}"

    @functools.wraps(fn)
    def wrapper(obj, *args):
        store = obj.__dict__.setdefault(key, {})
        if args not in store:
            store[args] = fn(obj, *args)
        return store[args]

    return wrapper
