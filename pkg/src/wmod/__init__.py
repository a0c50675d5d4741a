name = 'wmod'
