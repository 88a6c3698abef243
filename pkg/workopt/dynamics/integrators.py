def rk4_step(func, t, y, dt, k1=None):
    """
    Один шаг классического метода Рунге-Кутты четвертого порядка.

    Args:
        func (callable): Правая часть f(t, y).
        t (float): Текущее время.
        y (numpy.ndarray): Текущее состояние.
        dt (float): Шаг.
        k1 (numpy.ndarray | None): Уже вычисленное f(t, y).

    Returns:
        numpy.ndarray: Состояние в момент t + dt.
    """
    if k1 is None:
        k1 = func(t, y)
    half = 0.5 * dt
    k2 = func(t + half, y + half * k1)
    k3 = func(t + half, y + half * k2)
    k4 = func(t + dt, y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
