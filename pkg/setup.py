from setuptools import find_packages, setup

setup(
    name='powerideals',
    version='0.1',
    description='Power ideals and inverse systems of central hyperplane arrangements',
    packages=find_packages(exclude=['tests']),
    package_data={'powerideals.harness': ['data/*.arr']},
    install_requires=[
        'click>=8.1',
        'python-dotenv>=1.0',
    ],
    extras_require={'test': ['pytest>=8.0', 'sympy>=1.12']},
    entry_points={'console_scripts': ['pil=powerideals:main']},
    python_requires='>=3.10',
)
